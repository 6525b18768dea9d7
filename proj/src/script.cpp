#include "pathrw/script.hpp"

#include <cctype>
#include <set>

#include "pathrw/engine.hpp"
#include "pathrw/error.hpp"

namespace pathrw {

std::string_view to_string(ScriptErrorKind kind) {
  switch (kind) {
    case ScriptErrorKind::Syntax: return "SyntaxError";
    case ScriptErrorKind::UndeclaredName: return "UndeclaredName";
    case ScriptErrorKind::TypeMismatch: return "TypeMismatch";
    case ScriptErrorKind::NotAnAxiomInstance: return "NotAnAxiomInstance";
  }
  return "?";
}

ScriptError::ScriptError(ScriptErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         std::string(pathrw::to_string(kind)) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

const PathTerm& Script::path(const std::string& name) const {
  for (const auto& [n, t] : paths) {
    if (n == name) return t;
  }
  throw std::out_of_range("no path named '" + name + "'");
}

std::map<std::string, PathTerm> Script::path_map() const {
  return {paths.begin(), paths.end()};
}

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, LBrack, RBrack, Colon, Assign, Equals, Dot, Lambda, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

struct Loc {
  std::size_t line = 1;
  std::size_t col = 1;
};

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {"tau", "sigma", "rho", "xi", "mu", "nu", "step"};
  return k;
}

// Greek aliases, as UTF-8 byte pairs.
const char* alias(unsigned char a, unsigned char b) {
  if (a == 0xCF && b == 0x84) return "tau";
  if (a == 0xCF && b == 0x83) return "sigma";
  if (a == 0xCF && b == 0x81) return "rho";
  if (a == 0xCE && b == 0xBE) return "xi";
  if (a == 0xCE && b == 0xBC) return "mu";
  if (a == 0xCE && b == 0xBD) return "nu";
  if (a == 0xCF && b == 0x85) return "nu";
  if (a == 0xCE && b == 0xBB) return "\\";
  return nullptr;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(std::string_view src, std::size_t line) {
  std::vector<Token> out;
  std::size_t col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    std::size_t start = col;
    if (i + 1 < src.size()) {
      if (const char* a = alias(src[i], src[i + 1])) {
        if (a[0] == '\\') {
          out.push_back({Tok::Lambda, "\\", line, start});
        } else {
          out.push_back({Tok::Ident, a, line, start});
        }
        i += 2;
        ++col;
        continue;
      }
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start});
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), line, start});
      col += j - i;
      i = j;
      continue;
    }
    Tok k;
    std::size_t len = 1;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '[': k = Tok::LBrack; break;
      case ']': k = Tok::RBrack; break;
      case '=': k = Tok::Equals; break;
      case '.': k = Tok::Dot; break;
      case '\\': k = Tok::Lambda; break;
      case ':':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          k = Tok::Assign;
          len = 2;
        } else {
          k = Tok::Colon;
        }
        break;
      default: {
        std::size_t n = 1;
        while (i + n < src.size() && (static_cast<unsigned char>(src[i + n]) & 0xC0) == 0x80) ++n;
        throw ScriptError(ScriptErrorKind::Syntax, line, start,
                          "unexpected character '" + std::string(src.substr(i, n)) + "'");
      }
    }
    out.push_back({k, std::string(src.substr(i, len)), line, start});
    i += len;
    col += len;
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of line") : "'" + t.text + "'";
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Context& ctx, const std::map<std::string, PathTerm>& named)
      : toks_(std::move(tokens)), ctx_(ctx), named_(named) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(std::string_view s) const { return at(Tok::Ident) && peek().text == s; }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  const Token& expect(Tok k, std::string_view what) {
    if (!at(k)) fail(ScriptErrorKind::Syntax, peek(), "expected " + std::string(what) + ", found " + describe(peek()));
    return take();
  }

  [[noreturn]] void fail(ScriptErrorKind kind, const Token& at, const std::string& msg) const {
    throw ScriptError(kind, at.line, at.col, msg);
  }

  [[noreturn]] void fail_at(ScriptErrorKind kind, Loc at, const std::string& msg) const {
    throw ScriptError(kind, at.line, at.col, msg);
  }

  void expect_end() {
    if (!at(Tok::End)) fail(ScriptErrorKind::Syntax, peek(), "unexpected " + describe(peek()));
  }

  std::string name(std::string_view what) {
    const Token& t = expect(Tok::Ident, what);
    if (keywords().count(t.text)) fail(ScriptErrorKind::Syntax, t, "'" + t.text + "' is a reserved word");
    return t.text;
  }

  // λ-expressions. `bound` holds the binders in scope.
  LambdaTerm lambda(std::vector<std::string>& bound) {
    if (at(Tok::Lambda)) {
      take();
      std::vector<std::string> xs;
      xs.push_back(name("a bound variable"));
      while (at(Tok::Ident)) xs.push_back(name("a bound variable"));
      expect(Tok::Dot, "'.'");
      for (const auto& x : xs) bound.push_back(x);
      LambdaTerm body = lambda(bound);
      for (std::size_t i = 0; i < xs.size(); ++i) bound.pop_back();
      for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = LambdaTerm::abs(*it, std::move(body));
      return body;
    }
    LambdaTerm acc = lambda_atom(bound);
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Lambda)) {
      if (at(Tok::Lambda)) {
        acc = LambdaTerm::app(std::move(acc), lambda(bound));
        break;
      }
      acc = LambdaTerm::app(std::move(acc), lambda_atom(bound));
    }
    return acc;
  }

  LambdaTerm lambda_atom(std::vector<std::string>& bound) {
    if (at(Tok::LParen)) {
      take();
      LambdaTerm m = lambda(bound);
      expect(Tok::RParen, "')'");
      return m;
    }
    const Token& t = expect(Tok::Ident, "a λ-term");
    if (keywords().count(t.text)) fail(ScriptErrorKind::Syntax, t, "'" + t.text + "' is a reserved word");
    bool is_bound = std::find(bound.begin(), bound.end(), t.text) != bound.end();
    if (!is_bound && !ctx_.has_element(t.text)) {
      fail(ScriptErrorKind::UndeclaredName, t, "undeclared element '" + t.text + "'");
    }
    return LambdaTerm::var(t.text);
  }

  LambdaTerm lambda() {
    std::vector<std::string> bound;
    return lambda(bound);
  }

  // Path expressions; `pos` is the position of the node being parsed.
  PathTerm path(Position& pos) {
    const Token& head = peek();
    locs_.emplace(pos, Loc{head.line, head.col});
    if (head.kind != Tok::Ident) fail(ScriptErrorKind::Syntax, head, "expected a path, found " + describe(head));
    std::string kw = head.text;
    if (!keywords().count(kw)) {
      take();
      if (ctx_.has_atom(kw)) return PathTerm::atom(kw);
      if (auto it = named_.find(kw); it != named_.end()) return it->second;
      if (ctx_.has_element(kw) || ctx_.has_type(kw)) {
        fail(ScriptErrorKind::TypeMismatch, head, "'" + kw + "' is not a path; use rho(" + kw + ") for its identity");
      }
      fail(ScriptErrorKind::UndeclaredName, head, "undeclared path or step '" + kw + "'");
    }
    take();
    expect(Tok::LParen, "'('");
    auto build = [&](auto&& f) -> PathTerm {
      try {
        return f();
      } catch (const PathError& e) {
        fail(ScriptErrorKind::TypeMismatch, head, e.what());
      }
    };
    PathTerm out = [&]() -> PathTerm {
      if (kw == "tau") {
        PathTerm l = child(pos, 0);
        expect(Tok::Comma, "','");
        PathTerm r = child(pos, 1);
        return build([&] { return PathTerm::trans(l, r); });
      }
      if (kw == "sigma") return PathTerm::sym(child(pos, 0));
      if (kw == "rho") return PathTerm::refl(object());
      if (kw == "xi") {
        std::string x = name("a bound variable");
        expect(Tok::Comma, "','");
        PathTerm p = child(pos, 0);
        return build([&] { return PathTerm::xi(x, p); });
      }
      if (kw == "mu") {
        LambdaTerm m = lambda();
        expect(Tok::Comma, "','");
        PathTerm p = child(pos, 0);
        return build([&] { return PathTerm::mu(m, p); });
      }
      if (kw == "nu") {
        PathTerm p = child(pos, 0);
        expect(Tok::Comma, "','");
        LambdaTerm m = lambda();
        return build([&] { return PathTerm::nu(p, m); });
      }
      return step(head);
    }();
    expect(Tok::RParen, "')'");
    return out;
  }

  PathTerm child(Position& pos, std::size_t i) {
    pos.push_back(i);
    PathTerm t = path(pos);
    pos.pop_back();
    return t;
  }

  // A standalone path with its own position table (step atom endpoints,
  // reflexivity on paths).
  PathTerm nested_path() {
    auto saved = std::move(locs_);
    locs_.clear();
    Position pos;
    Loc start{peek().line, peek().col};
    PathTerm t = path(pos);
    check(t, start);
    locs_ = std::move(saved);
    return t;
  }

  bool starts_path() const {
    if (!at(Tok::Ident)) return false;
    const std::string& s = peek().text;
    return keywords().count(s) || ctx_.has_atom(s) || named_.count(s);
  }

  Object object() {
    if (starts_path()) return Object(nested_path());
    if (at(Tok::RParen)) fail(ScriptErrorKind::Syntax, peek(), "rho needs an element, a λ-term or a path");
    return Object(lambda());
  }

  PathTerm step(const Token& head) {
    const Token& rule_tok = expect(Tok::Ident, "a rule name");
    expect(Tok::Comma, "','");
    Position where;
    expect(Tok::LBrack, "'['");
    while (!at(Tok::RBrack)) {
      if (!where.empty()) expect(Tok::Comma, "','");
      where.push_back(std::stoul(expect(Tok::Number, "a child index").text));
    }
    take();
    expect(Tok::Comma, "','");
    PathTerm before = nested_path();
    expect(Tok::Comma, "','");
    PathTerm after = nested_path();
    if (before.level() != after.level()) {
      fail(ScriptErrorKind::TypeMismatch, head, "step endpoints have different levels");
    }
    try {
      parse_rule_name(rule_tok.text);
    } catch (const PathError& e) {
      fail(ScriptErrorKind::Syntax, rule_tok, e.what());
    }
    RewriteStep s{rule_tok.text, where, Direction::Forward, before, after, before.level()};
    if (!replay_step(s, RuleSet::groupoid_complete(), ctx_)) {
      fail(ScriptErrorKind::TypeMismatch, head, "step(" + rule_tok.text + ", ...) is not a contraction");
    }
    return PathTerm::step(std::move(s));
  }

  // Reports ill-formed chaining at the offending node.
  void check(const PathTerm& t, Loc fallback) {
    try {
      endpoints(t, ctx_);
    } catch (const PathError& e) {
      Loc at = fallback;
      Position p = e.position();
      while (true) {
        if (auto it = locs_.find(p); it != locs_.end()) {
          at = it->second;
          break;
        }
        if (p.empty()) break;
        p.pop_back();
      }
      ScriptErrorKind kind =
          e.kind() == ErrorKind::UnknownAtom ? ScriptErrorKind::UndeclaredName : ScriptErrorKind::TypeMismatch;
      fail_at(kind, at, e.what());
    }
  }

  PathTerm top_path() {
    locs_.clear();
    Position pos;
    Loc start{peek().line, peek().col};
    PathTerm t = path(pos);
    check(t, start);
    return t;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Context& ctx_;
  const std::map<std::string, PathTerm>& named_;
  std::map<Position, Loc> locs_;
};

class ScriptReader {
 public:
  Script run(std::string_view text) {
    std::size_t line = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view l = text.substr(start, end - start);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      statement(l, line);
      start = end + 1;
      ++line;
    }
    script_.context = ctx_;
    return std::move(script_);
  }

 private:
  void statement(std::string_view l, std::size_t line) {
    auto first = l.find_first_not_of(" \t");
    if (first == std::string_view::npos || l.substr(first, 2) == "--") return;
    Parser p(lex(l, line), ctx_, named_);
    const Token& kw = p.expect(Tok::Ident, "a declaration");
    if (kw.text == "type") {
      const Token& t = p.peek();
      std::string n = p.name("a type name");
      p.expect_end();
      declare(n, t);
      ctx_.add_type(n);
    } else if (kw.text == "elem") {
      std::vector<std::pair<std::string, Token>> names;
      do {
        const Token& t = p.peek();
        names.emplace_back(p.name("an element name"), t);
      } while (p.at(Tok::Ident));
      p.expect(Tok::Colon, "':'");
      const Token& ty = p.expect(Tok::Ident, "a type");
      p.expect_end();
      if (!ctx_.has_type(ty.text)) p.fail(ScriptErrorKind::UndeclaredName, ty, "undeclared type '" + ty.text + "'");
      for (const auto& [n, t] : names) {
        declare(n, t);
        ctx_.add_element(n, ty.text);
      }
    } else if (kw.text == "lam") {
      const Token& t = p.peek();
      std::string n = p.name("a λ-term name");
      p.expect(Tok::Assign, "':='");
      LambdaTerm m = p.lambda();
      std::string type;
      if (p.at(Tok::Colon)) {
        p.take();
        const Token& ty = p.expect(Tok::Ident, "a type");
        if (!ctx_.has_type(ty.text)) p.fail(ScriptErrorKind::UndeclaredName, ty, "undeclared type '" + ty.text + "'");
        type = ty.text;
      }
      p.expect_end();
      declare(n, t);
      ctx_.add_lambda(n, m, type);
    } else if (kw.text == "step") {
      const Token& t = p.peek();
      std::string n = p.name("a step name");
      p.expect(Tok::Colon, "':'");
      const Token& a = p.expect(Tok::Ident, "an element");
      p.expect(Tok::Equals, "'='");
      const Token& b = p.expect(Tok::Ident, "an element");
      AxiomTag tag = AxiomTag::Declared;
      if (p.at(Tok::Ident)) {
        const Token& tag_tok = p.take();
        try {
          tag = axiom_tag_from_string(tag_tok.text);
        } catch (const std::exception&) {
          p.fail(ScriptErrorKind::Syntax, tag_tok, "unknown axiom tag '" + tag_tok.text + "'");
        }
      }
      p.expect_end();
      declare(n, t);
      for (const Token* e : {&a, &b}) {
        if (!ctx_.has_element(e->text)) {
          p.fail(ScriptErrorKind::UndeclaredName, *e, "undeclared element '" + e->text + "'");
        }
      }
      const std::string& ta = ctx_.element_type(a.text);
      const std::string& tb = ctx_.element_type(b.text);
      if (ta != tb) {
        p.fail(ScriptErrorKind::TypeMismatch, b,
               "'" + a.text + " : " + ta + "' and '" + b.text + " : " + tb + "' have different types");
      }
      try {
        ctx_.add_atom(AtomDecl{n, a.text, b.text, ta, tag});
      } catch (const PathError& e) {
        p.fail(ScriptErrorKind::NotAnAxiomInstance, kw, e.what());
      }
    } else if (kw.text == "path") {
      const Token& t = p.peek();
      std::string n = p.name("a path name");
      p.expect(Tok::Assign, "':='");
      PathTerm body = p.top_path();
      p.expect_end();
      declare(n, t);
      named_.emplace(n, body);
      script_.paths.emplace_back(n, body);
    } else {
      p.fail(ScriptErrorKind::Syntax, kw, "unknown declaration '" + kw.text + "'");
    }
  }

  void declare(const std::string& n, const Token& at) {
    if (ctx_.has_name(n) || named_.count(n)) {
      throw ScriptError(ScriptErrorKind::Syntax, at.line, at.col, "name '" + n + "' is already declared");
    }
  }

  Context ctx_;
  std::map<std::string, PathTerm> named_;
  Script script_;
};

}  // namespace

Script parse_script(std::string_view text) { return ScriptReader().run(text); }

PathTerm parse_path(std::string_view text, const Context& ctx, const std::map<std::string, PathTerm>& named) {
  Parser p(lex(text, 1), ctx, named);
  PathTerm t = p.top_path();
  p.expect_end();
  return t;
}

LambdaTerm parse_lambda(std::string_view text, const Context& ctx) {
  static const std::map<std::string, PathTerm> none;
  Parser p(lex(text, 1), ctx, none);
  LambdaTerm m = p.lambda();
  p.expect_end();
  return m;
}

}  // namespace pathrw
