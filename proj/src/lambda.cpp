#include "pathrw/lambda.hpp"

#include <functional>
#include <vector>

#include "pathrw/error.hpp"

namespace pathrw {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

struct LambdaTerm::Node {
  Kind kind;
  std::string name;
  std::vector<LambdaTerm> kids;  // body (Abs) or function, argument (App)
  std::size_t depth = 1;
  std::size_t hash = 0;
};

LambdaTerm LambdaTerm::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::abs(std::string bound, LambdaTerm body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Abs;
  n->depth = body.depth() + 1;
  n->hash = mix(mix(2, std::hash<std::string>{}(bound)), body.hash());
  n->name = std::move(bound);
  n->kids.push_back(std::move(body));
  return LambdaTerm(std::move(n));
}

LambdaTerm LambdaTerm::app(LambdaTerm function, LambdaTerm argument) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->depth = std::max(function.depth(), argument.depth()) + 1;
  n->hash = mix(mix(3, function.hash()), argument.hash());
  n->kids.push_back(std::move(function));
  n->kids.push_back(std::move(argument));
  return LambdaTerm(std::move(n));
}

LambdaTerm::Kind LambdaTerm::kind() const { return node_->kind; }
const std::string& LambdaTerm::name() const { return node_->name; }
const LambdaTerm& LambdaTerm::body() const { return node_->kids.at(0); }
const LambdaTerm& LambdaTerm::function() const { return node_->kids.at(0); }
const LambdaTerm& LambdaTerm::argument() const { return node_->kids.at(1); }

std::size_t LambdaTerm::depth() const { return node_->depth; }
std::size_t LambdaTerm::hash() const { return node_->hash; }

std::size_t LambdaTerm::alpha_hash() const {
  std::vector<std::string> binders;
  std::function<std::size_t(const LambdaTerm&)> go = [&](const LambdaTerm& t) -> std::size_t {
    switch (t.kind()) {
      case Kind::Var:
        for (std::size_t i = binders.size(); i-- > 0;) {
          if (binders[i] == t.name()) return mix(11, binders.size() - 1 - i);
        }
        return mix(13, std::hash<std::string>{}(t.name()));
      case Kind::Abs: {
        binders.push_back(t.name());
        std::size_t h = mix(17, go(t.body()));
        binders.pop_back();
        return h;
      }
      case Kind::App:
        return mix(mix(19, go(t.function())), go(t.argument()));
    }
    return 0;
  };
  return go(*this);
}

std::string LambdaTerm::to_string() const {
  switch (kind()) {
    case Kind::Var:
      return name();
    case Kind::Abs:
      return "\\" + name() + ". " + body().to_string();
    case Kind::App: {
      std::string f = function().to_string();
      if (function().kind() == Kind::Abs) f = "(" + f + ")";
      std::string a = argument().to_string();
      if (argument().kind() != Kind::Var) a = "(" + a + ")";
      return f + " " + a;
    }
  }
  return {};
}

bool operator==(const LambdaTerm& a, const LambdaTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.kind()) {
    case LambdaTerm::Kind::Var:
      return a.name() == b.name();
    case LambdaTerm::Kind::Abs:
      return a.name() == b.name() && a.body() == b.body();
    case LambdaTerm::Kind::App:
      return a.function() == b.function() && a.argument() == b.argument();
  }
  return false;
}

namespace {

void collect_free(const LambdaTerm& m, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (m.kind()) {
    case LambdaTerm::Kind::Var:
      for (const auto& b : bound) {
        if (b == m.name()) return;
      }
      out.insert(m.name());
      return;
    case LambdaTerm::Kind::Abs:
      bound.push_back(m.name());
      collect_free(m.body(), bound, out);
      bound.pop_back();
      return;
    case LambdaTerm::Kind::App:
      collect_free(m.function(), bound, out);
      collect_free(m.argument(), bound, out);
      return;
  }
}

void collect_all_names(const LambdaTerm& m, std::set<std::string>& out) {
  switch (m.kind()) {
    case LambdaTerm::Kind::Var:
      out.insert(m.name());
      return;
    case LambdaTerm::Kind::Abs:
      out.insert(m.name());
      collect_all_names(m.body(), out);
      return;
    case LambdaTerm::Kind::App:
      collect_all_names(m.function(), out);
      collect_all_names(m.argument(), out);
      return;
  }
}

}  // namespace

std::set<std::string> free_vars(const LambdaTerm& m) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(m, bound, out);
  return out;
}

bool occurs_free(std::string_view x, const LambdaTerm& m) {
  switch (m.kind()) {
    case LambdaTerm::Kind::Var:
      return m.name() == x;
    case LambdaTerm::Kind::Abs:
      return m.name() != x && occurs_free(x, m.body());
    case LambdaTerm::Kind::App:
      return occurs_free(x, m.function()) || occurs_free(x, m.argument());
  }
  return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string candidate = base;
  while (avoid.count(candidate) != 0) candidate += "'";
  return candidate;
}

LambdaTerm substitute(const LambdaTerm& m, const std::string& x, const LambdaTerm& n) {
  switch (m.kind()) {
    case LambdaTerm::Kind::Var:
      return m.name() == x ? n : m;
    case LambdaTerm::Kind::App:
      return LambdaTerm::app(substitute(m.function(), x, n), substitute(m.argument(), x, n));
    case LambdaTerm::Kind::Abs: {
      const std::string& y = m.name();
      if (y == x || !occurs_free(x, m.body())) return m;
      if (!occurs_free(y, n)) return LambdaTerm::abs(y, substitute(m.body(), x, n));
      // y would capture a free variable of n: rename it first.
      std::set<std::string> avoid = free_vars(n);
      collect_all_names(m.body(), avoid);
      avoid.insert(x);
      std::string y2 = fresh_name(y, avoid);
      LambdaTerm renamed = substitute(m.body(), y, LambdaTerm::var(y2));
      return LambdaTerm::abs(y2, substitute(renamed, x, n));
    }
  }
  return m;
}

namespace {

bool alpha_eq_in(const LambdaTerm& m, const LambdaTerm& n, std::vector<std::string>& left,
                 std::vector<std::string>& right) {
  if (m.kind() != n.kind()) return false;
  switch (m.kind()) {
    case LambdaTerm::Kind::Var: {
      // Innermost binder wins; both sides must agree on binder depth.
      std::size_t i = left.size();
      while (i > 0 && left[i - 1] != m.name()) --i;
      std::size_t j = right.size();
      while (j > 0 && right[j - 1] != n.name()) --j;
      if (i == 0 && j == 0) return m.name() == n.name();
      return i == j;
    }
    case LambdaTerm::Kind::Abs: {
      left.push_back(m.name());
      right.push_back(n.name());
      bool eq = alpha_eq_in(m.body(), n.body(), left, right);
      left.pop_back();
      right.pop_back();
      return eq;
    }
    case LambdaTerm::Kind::App:
      return alpha_eq_in(m.function(), n.function(), left, right) &&
             alpha_eq_in(m.argument(), n.argument(), left, right);
  }
  return false;
}

void canonical_into(const LambdaTerm& m, std::vector<std::string>& binders, std::string& out) {
  switch (m.kind()) {
    case LambdaTerm::Kind::Var:
      for (std::size_t i = binders.size(); i-- > 0;) {
        if (binders[i] == m.name()) {
          out += "#" + std::to_string(binders.size() - 1 - i);
          return;
        }
      }
      out += m.name();
      return;
    case LambdaTerm::Kind::Abs:
      out += "(\\";
      binders.push_back(m.name());
      canonical_into(m.body(), binders, out);
      binders.pop_back();
      out += ")";
      return;
    case LambdaTerm::Kind::App:
      out += "(";
      canonical_into(m.function(), binders, out);
      out += " ";
      canonical_into(m.argument(), binders, out);
      out += ")";
      return;
  }
}

}  // namespace

bool alpha_eq(const LambdaTerm& m, const LambdaTerm& n) {
  if (m == n) return true;
  std::vector<std::string> left, right;
  return alpha_eq_in(m, n, left, right);
}

std::string canonical_string(const LambdaTerm& m) {
  std::vector<std::string> binders;
  std::string out;
  canonical_into(m, binders, out);
  return out;
}

std::string_view to_string(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::Declared: return "declared";
    case AxiomTag::Beta: return "beta";
    case AxiomTag::Eta: return "eta";
    case AxiomTag::Alpha: return "alpha";
  }
  return "declared";
}

AxiomTag axiom_tag_from_string(std::string_view s) {
  if (s == "declared") return AxiomTag::Declared;
  if (s == "beta") return AxiomTag::Beta;
  if (s == "eta") return AxiomTag::Eta;
  if (s == "alpha") return AxiomTag::Alpha;
  throw std::invalid_argument("unknown axiom tag '" + std::string(s) + "'");
}

bool is_axiom_instance(AxiomTag tag, const LambdaTerm& source, const LambdaTerm& target) {
  switch (tag) {
    case AxiomTag::Declared:
      return true;
    case AxiomTag::Alpha:
      return alpha_eq(source, target);
    case AxiomTag::Beta: {
      if (source.kind() != LambdaTerm::Kind::App) return false;
      const LambdaTerm& f = source.function();
      if (f.kind() != LambdaTerm::Kind::Abs) return false;
      return alpha_eq(target, substitute(f.body(), f.name(), source.argument()));
    }
    case AxiomTag::Eta: {
      if (source.kind() != LambdaTerm::Kind::Abs) return false;
      const std::string& x = source.name();
      const LambdaTerm& body = source.body();
      if (body.kind() != LambdaTerm::Kind::App) return false;
      const LambdaTerm& arg = body.argument();
      if (arg.kind() != LambdaTerm::Kind::Var || arg.name() != x) return false;
      if (occurs_free(x, body.function())) return false;
      return alpha_eq(body.function(), target);
    }
  }
  return false;
}

}  // namespace pathrw
