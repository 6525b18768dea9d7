#include "pathrw/rules.hpp"

#include <charconv>

#include "pathrw/error.hpp"

namespace pathrw {

Pattern Pattern::var(std::string name) {
  Pattern p;
  p.kind = Kind::Var;
  p.name = std::move(name);
  return p;
}

Pattern Pattern::refl(std::string name, ObjectRef ref) {
  Pattern p;
  p.kind = Kind::Refl;
  p.name = std::move(name);
  p.ref = ref;
  return p;
}

Pattern Pattern::sym(Pattern sub) {
  Pattern p;
  p.kind = Kind::Sym;
  p.kids.push_back(std::move(sub));
  return p;
}

Pattern Pattern::trans(Pattern l, Pattern r) {
  Pattern p;
  p.kind = Kind::Trans;
  p.kids.push_back(std::move(l));
  p.kids.push_back(std::move(r));
  return p;
}

std::size_t Pattern::size() const {
  std::size_t n = 1;
  for (const auto& k : kids) n += k.size();
  return n;
}

std::string Pattern::to_string() const {
  switch (kind) {
    case Kind::Var:
      return name;
    case Kind::Refl:
      switch (ref) {
        case ObjectRef::Bound: return "rho";
        case ObjectRef::SourceOf: return "rho_src(" + name + ")";
        case ObjectRef::TargetOf: return "rho_tgt(" + name + ")";
      }
      return "rho";
    case Kind::Sym:
      return "sigma(" + kids[0].to_string() + ")";
    case Kind::Trans:
      return "tau(" + kids[0].to_string() + ", " + kids[1].to_string() + ")";
  }
  return {};
}

bool match_into(const Pattern& p, const PathTerm& t, Bindings& b) {
  switch (p.kind) {
    case Pattern::Kind::Var: {
      auto it = b.terms.find(p.name);
      if (it != b.terms.end()) return it->second == t;
      b.terms.emplace(p.name, t);
      return true;
    }
    case Pattern::Kind::Refl: {
      if (!t.is(PathKind::Refl)) return false;
      if (p.ref != ObjectRef::Bound) return true;
      auto it = b.objects.find(p.name);
      if (it != b.objects.end()) return it->second == t.object();
      b.objects.emplace(p.name, t.object());
      return true;
    }
    case Pattern::Kind::Sym:
      return t.is(PathKind::Sym) && match_into(p.kids[0], t.sub(), b);
    case Pattern::Kind::Trans:
      return t.is(PathKind::Trans) && match_into(p.kids[0], t.left(), b) && match_into(p.kids[1], t.right(), b);
  }
  return false;
}

std::optional<Bindings> match(const Pattern& p, const PathTerm& t) {
  Bindings b;
  if (!match_into(p, t, b)) return std::nullopt;
  return b;
}

PathTerm instantiate(const Pattern& p, const Bindings& b, const Context& ctx) {
  switch (p.kind) {
    case Pattern::Kind::Var:
      return b.terms.at(p.name);
    case Pattern::Kind::Refl:
      switch (p.ref) {
        case ObjectRef::Bound:
          return PathTerm::refl(b.objects.at(p.name));
        case ObjectRef::SourceOf:
          return PathTerm::refl(endpoints(b.terms.at(p.name), ctx).first);
        case ObjectRef::TargetOf:
          return PathTerm::refl(endpoints(b.terms.at(p.name), ctx).second);
      }
      break;
    case Pattern::Kind::Sym:
      return PathTerm::sym(instantiate(p.kids[0], b, ctx));
    case Pattern::Kind::Trans:
      return PathTerm::trans(instantiate(p.kids[0], b, ctx), instantiate(p.kids[1], b, ctx));
  }
  throw std::logic_error("unreachable");
}

std::string RuleSchema::name() const { return rule_name(base, level); }

std::string rule_name(std::string_view base, std::size_t level) {
  if (level == 1) return std::string(base);
  return std::string(base) + "_" + std::to_string(level);
}

std::pair<std::string, std::size_t> parse_rule_name(std::string_view name) {
  auto us = name.find('_');
  if (us == std::string_view::npos) {
    if (name.empty()) throw PathError(ErrorKind::UnknownRule, "empty rule name");
    return {std::string(name), 1};
  }
  std::size_t level = 0;
  auto digits = name.substr(us + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), level);
  if (us == 0 || ec != std::errc() || ptr != digits.data() + digits.size() || level == 0) {
    throw PathError(ErrorKind::UnknownRule, "malformed rule name '" + std::string(name) + "'");
  }
  return {std::string(name.substr(0, us)), level};
}

RuleSchema instantiate_at_level(const RuleSchema& schema, std::size_t level) {
  if (level == 0) throw std::invalid_argument("rule levels start at 1");
  RuleSchema out = schema;
  out.level = level;
  return out;
}

std::optional<PathTerm> apply_at_root(const RuleSchema& schema, const PathTerm& t, const Context& ctx) {
  if (t.level() != schema.level) return std::nullopt;
  auto b = match(schema.lhs, t);
  if (!b) return std::nullopt;
  return instantiate(schema.rhs, *b, ctx);
}

namespace {

using P = Pattern;

std::vector<RuleSchema> table_rules() {
  auto r = P::var("r");
  auto s = P::var("s");
  auto t = P::var("t");
  std::vector<RuleSchema> out;
  out.push_back({"sr", 1, P::sym(P::refl("x")), P::refl("x"), false, {}});
  out.push_back({"ss", 1, P::sym(P::sym(r)), r, false, {}});
  out.push_back({"tr", 1, P::trans(r, P::sym(r)), P::refl("r", ObjectRef::SourceOf), false, {}});
  out.push_back({"tsr", 1, P::trans(P::sym(r), r), P::refl("r", ObjectRef::TargetOf), false, {}});
  out.push_back({"trr", 1, P::trans(r, P::refl("x")), r, false, {}});
  out.push_back({"tlr", 1, P::trans(P::refl("x"), r), r, false, {}});
  out.push_back({"tt", 1, P::trans(P::trans(t, r), s), P::trans(t, P::trans(r, s)), false, {}});
  return out;
}

std::vector<RuleSchema> extension_rules() {
  auto r = P::var("r");
  auto s = P::var("s");
  auto t = P::var("t");
  auto src_r = P::refl("r", ObjectRef::SourceOf);
  auto tgt_r = P::refl("r", ObjectRef::TargetOf);
  auto tgt_s = P::refl("s", ObjectRef::TargetOf);
  auto F = Direction::Forward;
  auto B = Direction::Reverse;
  std::vector<RuleSchema> out;

  // σ(τ(r,s)) = σ(τ(r,s))·ρ = σ(τ(r,s))·(r·(s·σs))·σr ... = ρ·(σs·σr)
  auto x = P::sym(P::trans(r, s));
  auto ys = P::trans(P::sym(s), P::sym(r));
  out.push_back({"st", 1, x, ys, true,
                 {
                     {"trr", {}, B, P::trans(x, src_r)},
                     {"tr", {1}, B, P::trans(x, P::trans(r, P::sym(r)))},
                     {"trr", {1, 0}, B, P::trans(x, P::trans(P::trans(r, tgt_r), P::sym(r)))},
                     {"tr", {1, 0, 1}, B, P::trans(x, P::trans(P::trans(r, P::trans(s, P::sym(s))), P::sym(r)))},
                     {"tt", {1, 0}, B, P::trans(x, P::trans(P::trans(P::trans(r, s), P::sym(s)), P::sym(r)))},
                     {"tt", {1}, F, P::trans(x, P::trans(P::trans(r, s), ys))},
                     {"tt", {}, B, P::trans(P::trans(x, P::trans(r, s)), ys)},
                     {"tsr", {0}, F, P::trans(tgt_s, ys)},
                     {"tlr", {}, F, ys},
                 }});

  out.push_back({"ttr", 1, P::trans(r, P::trans(P::sym(r), t)), t, true,
                 {
                     {"tt", {}, B, P::trans(P::trans(r, P::sym(r)), t)},
                     {"tr", {0}, F, P::trans(src_r, t)},
                     {"tlr", {}, F, t},
                 }});

  out.push_back({"ttsr", 1, P::trans(P::sym(r), P::trans(r, t)), t, true,
                 {
                     {"tt", {}, B, P::trans(P::trans(P::sym(r), r), t)},
                     {"tsr", {0}, F, P::trans(tgt_r, t)},
                     {"tlr", {}, F, t},
                 }});
  return out;
}

}  // namespace

RuleSet::RuleSet(std::string name, std::vector<RuleSchema> schemas)
    : name_(std::move(name)), schemas_(std::move(schemas)) {
  if (!schemas_.empty()) level_ = schemas_.front().level;
}

const RuleSet& RuleSet::paper7() {
  static const RuleSet rs("paper7", table_rules());
  return rs;
}

const RuleSet& RuleSet::groupoid_complete() {
  static const RuleSet rs = [] {
    auto schemas = table_rules();
    for (auto& e : extension_rules()) schemas.push_back(std::move(e));
    return RuleSet("groupoid-complete", std::move(schemas));
  }();
  return rs;
}

const RuleSet& RuleSet::by_name(std::string_view name) {
  if (name == "paper7") return paper7();
  if (name == "groupoid-complete") return groupoid_complete();
  throw std::invalid_argument("unknown rule set '" + std::string(name) +
                              "' (expected paper7 or groupoid-complete)");
}

RuleSet RuleSet::at_level(std::size_t level) const {
  std::vector<RuleSchema> out;
  out.reserve(schemas_.size());
  for (const auto& s : schemas_) out.push_back(instantiate_at_level(s, level));
  return RuleSet(name_, std::move(out));
}

bool RuleSet::has_extensions() const {
  for (const auto& s : schemas_) {
    if (s.extension) return true;
  }
  return false;
}

std::optional<RuleSchema> RuleSet::find(std::string_view rule) const {
  auto [base, level] = parse_rule_name(rule);
  for (const auto& s : schemas_) {
    if (s.base == base) return instantiate_at_level(s, level);
  }
  return std::nullopt;
}

const std::vector<std::string>& table_rule_names() {
  static const std::vector<std::string> names = {"sr", "ss", "tr", "tsr", "trr", "tlr", "tt"};
  return names;
}

namespace {

void collect_redexes(const RuleSet& rs, const PathTerm& t, Position& pos, std::vector<Redex>& out,
                     bool outermost) {
  auto here = [&] {
    for (const auto& s : rs.schemas()) {
      Bindings b;
      if (match_into(s.lhs, t, b)) out.push_back({rule_name(s.base, t.level()), pos});
    }
  };
  if (outermost) here();
  for (std::size_t i = 0; i < t.arity(); ++i) {
    pos.push_back(i);
    collect_redexes(rs, t.child(i), pos, out, outermost);
    pos.pop_back();
  }
  if (!outermost) here();
}

bool find_first(const RuleSet& rs, const PathTerm& t, Position& pos, bool outermost, Redex& out) {
  auto here = [&] {
    for (const auto& s : rs.schemas()) {
      Bindings b;
      if (match_into(s.lhs, t, b)) {
        out = {rule_name(s.base, t.level()), pos};
        return true;
      }
    }
    return false;
  };
  if (outermost && here()) return true;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    pos.push_back(i);
    if (find_first(rs, t.child(i), pos, outermost, out)) return true;
    pos.pop_back();
  }
  return !outermost && here();
}

}  // namespace

std::vector<Redex> match_redexes(const RuleSet& rs, const PathTerm& t) {
  std::vector<Redex> out;
  Position pos;
  collect_redexes(rs, t, pos, out, false);
  return out;
}

std::optional<Redex> first_redex(const RuleSet& rs, const PathTerm& t, Strategy strategy) {
  Redex r;
  Position pos;
  if (find_first(rs, t, pos, strategy == Strategy::LeftmostOutermost, r)) return r;
  return std::nullopt;
}

}  // namespace pathrw
