#include "pathrw/groupoid.hpp"

#include <map>
#include <random>

#include "pathrw/error.hpp"

namespace pathrw {

PathTerm compose(const PathTerm& first, const PathTerm& second, const Context& ctx) {
  auto a = endpoints(first, ctx);
  auto b = endpoints(second, ctx);
  if (!(a.second == b.first)) {
    throw PathError(ErrorKind::EndpointMismatch, "cannot compose " + to_string(first) + " ending at " +
                                                     a.second.to_string() + " with " + to_string(second) +
                                                     " starting at " + b.first.to_string());
  }
  return PathTerm::trans(first, second);
}

std::string_view to_string(Law law) {
  switch (law) {
    case Law::Assoc: return "assoc";
    case Law::LeftUnit: return "left-unit";
    case Law::RightUnit: return "right-unit";
    case Law::LeftInverse: return "left-inverse";
    case Law::RightInverse: return "right-inverse";
  }
  return "?";
}

namespace {

void require_level(const PathTerm& t, std::size_t level) {
  if (t.level() != level) {
    throw PathError(ErrorKind::LevelMismatch, "law sample " + to_string(t) + " has level " +
                                                  std::to_string(t.level()) + ", expected " + std::to_string(level));
  }
}

LawReport prove(Law law, std::size_t level, std::vector<PathTerm> sample, PathTerm lhs, PathTerm rhs,
                std::string_view rule, const Context& ctx) {
  const RuleSet& rs = RuleSet::paper7();
  std::string name = rule_name(rule, level);
  Derivation w = Derivation::empty_at(lhs);
  auto contractum = apply_at_root(*rs.find(name), lhs, ctx);
  if (contractum && *contractum == rhs) {
    w.steps.push_back(RewriteStep{name, {}, Direction::Forward, lhs, rhs, level});
  } else if (!(lhs == rhs)) {
    auto res = decide_rw_equal(lhs, rhs, rs, ctx, 20);
    if (res.witness) w = std::move(*res.witness);
  }
  bool verified = replay_derivation(w, rs, ctx) && w.start == lhs && w.end() == rhs;
  for (const auto& s : w.steps) verified = verified && parse_rule_name(s.rule).second == level;
  return LawReport{law, level, std::move(sample), std::move(lhs), std::move(rhs), std::move(w), verified};
}

}  // namespace

LawReport check_assoc(const PathTerm& s, const PathTerm& r, const PathTerm& t, std::size_t level,
                      const Context& ctx) {
  for (const auto* x : {&s, &r, &t}) require_level(*x, level);
  PathTerm lhs = compose(compose(s, r, ctx), t, ctx);
  PathTerm rhs = compose(s, compose(r, t, ctx), ctx);
  return prove(Law::Assoc, level, {s, r, t}, lhs, rhs, "tt", ctx);
}

std::pair<LawReport, LawReport> check_units(const PathTerm& s, std::size_t level, const Context& ctx) {
  require_level(s, level);
  auto [a, b] = endpoints(s, ctx);
  return {prove(Law::LeftUnit, level, {s}, PathTerm::trans(PathTerm::refl(a), s), s, "tlr", ctx),
          prove(Law::RightUnit, level, {s}, PathTerm::trans(s, PathTerm::refl(b)), s, "trr", ctx)};
}

std::pair<LawReport, LawReport> check_inverses(const PathTerm& s, std::size_t level, const Context& ctx) {
  require_level(s, level);
  auto [a, b] = endpoints(s, ctx);
  return {prove(Law::RightInverse, level, {s}, PathTerm::trans(s, PathTerm::sym(s)), PathTerm::refl(a), "tr", ctx),
          prove(Law::LeftInverse, level, {s}, PathTerm::trans(PathTerm::sym(s), s), PathTerm::refl(b), "tsr", ctx)};
}

std::size_t SuiteReport::passed() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.verified ? 1 : 0;
  return n;
}

std::size_t SuiteReport::failed() const { return reports.size() - passed(); }

namespace {

class Sampler {
 public:
  Sampler(const Context& ctx, std::uint64_t seed) : ctx_(ctx), rng_(seed) {
    for (const auto& a : ctx.atoms()) {
      PathTerm t = PathTerm::atom(a.name);
      atoms_.push_back({t, endpoints(t, ctx)});
    }
    if (atoms_.empty()) throw PathError(ErrorKind::InvalidContext, "law sampling needs at least one atom");
  }

  std::vector<PathTerm> triple(std::size_t level) {
    if (level == 1) {
      PathTerm s = walk_term(pick_element(), true, 2);
      PathTerm r = walk_term(endpoints(s, ctx_).second, true, 2);
      PathTerm t = walk_term(endpoints(r, ctx_).second, true, 2);
      return {s, r, t};
    }
    return arrows(level, 3);
  }

 private:
  struct Edge {
    PathTerm term;
    Endpoints ends;
  };

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  Object pick_element() {
    const auto& a = atoms_[pick(atoms_.size())];
    return coin(0.5) ? a.ends.first : a.ends.second;
  }

  // A random level 1 term leaving `v` (out) or arriving at `v` (!out).
  PathTerm walk_term(const Object& v, bool out, int depth) {
    double roll = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (depth <= 0 || roll < 0.4) {
      std::vector<PathTerm> leaves{PathTerm::refl(v)};
      for (const auto& e : atoms_) {
        if ((out ? e.ends.first : e.ends.second) == v) leaves.push_back(e.term);
        if ((out ? e.ends.second : e.ends.first) == v) leaves.push_back(PathTerm::sym(e.term));
      }
      if (leaves.size() > 1 && coin(0.8)) return leaves[1 + pick(leaves.size() - 1)];
      return leaves[pick(leaves.size())];
    }
    if (roll < 0.6) return PathTerm::sym(walk_term(v, !out, depth - 1));
    if (out) {
      PathTerm l = walk_term(v, true, depth - 1);
      return PathTerm::trans(l, walk_term(endpoints(l, ctx_).second, true, depth - 1));
    }
    PathTerm r = walk_term(v, false, depth - 1);
    return PathTerm::trans(walk_term(endpoints(r, ctx_).first, false, depth - 1), r);
  }

  // One random contraction or reverse expansion under paper7.
  PathTerm rewrite(const PathTerm& u, std::size_t cap) {
    const RuleSet& rs = RuleSet::paper7();
    auto redexes = match_redexes(rs, u);
    std::vector<RewriteStep> expansions;
    if (u.size() < cap) expansions = reverse_expansions(u, rs, ctx_, make_pool({u}, ctx_));
    if (!redexes.empty() && (expansions.empty() || coin(0.5))) {
      const Redex& r = redexes[pick(redexes.size())];
      return contract_once(u, r.rule, r.position, rs, ctx_).first;
    }
    if (expansions.empty()) return u;
    return expansions[pick(expansions.size())].after;
  }

  static bool mentions_atom(const PathTerm& t) {
    if (t.is(PathKind::Atom)) return true;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (mentions_atom(t.child(i))) return true;
    }
    return false;
  }

  PathTerm wander(PathTerm u, std::size_t steps, std::size_t cap) {
    for (std::size_t i = 0; i < steps; ++i) u = rewrite(u, cap);
    return u;
  }

  // Fixed per run: all level n arrows live over terms rw-equal to this.
  const PathTerm& base(std::size_t level) {
    auto it = bases_.find(level);
    if (it != bases_.end()) return it->second;
    PathTerm b = level == 1 ? walk_term(pick_element(), true, 2) : [&] {
      auto a = arrows(level, 2);
      return PathTerm::trans(a[0], a[1]);
    }();
    for (int tries = 0; level == 1 && tries < 100 && !mentions_atom(b); ++tries) {
      b = walk_term(pick_element(), true, 3);
    }
    return bases_.emplace(level, std::move(b)).first->second;
  }

  // `count` consecutive level n arrows (n >= 2), each the lifted witness of
  // an rw_{n-1}-equality between neighbouring terms of a random walk.
  std::vector<PathTerm> arrows(std::size_t level, std::size_t count) {
    const PathTerm& b = base(level - 1);
    std::size_t cap = b.size() + 6;
    PathTerm u = wander(b, pick(3), cap);
    std::vector<PathTerm> out;
    for (std::size_t i = 0; i < count; ++i) {
      PathTerm v = wander(u, 1 + pick(2), cap);
      for (int tries = 0; tries < 10 && v == u; ++tries) v = wander(u, 1 + pick(2), cap);
      auto res = decide_rw_equal(u, v, RuleSet::paper7(), ctx_, 20);
      if (!res.witness) throw std::logic_error("no witness between walk neighbours " + to_string(u));
      out.push_back(derivation_to_path(*res.witness));
      u = std::move(v);
    }
    return out;
  }

  const Context& ctx_;
  std::mt19937_64 rng_;
  std::vector<Edge> atoms_;
  std::map<std::size_t, PathTerm> bases_;
};

}  // namespace

SuiteReport run_laws(const Context& ctx, std::size_t level, std::size_t samples, std::uint64_t seed) {
  if (level == 0) throw std::invalid_argument("law levels start at 1");
  SuiteReport report{level, samples, seed, {}};
  if (samples == 0) return report;
  Sampler sampler(ctx, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    auto x = sampler.triple(level);
    report.reports.push_back(check_assoc(x[0], x[1], x[2], level, ctx));
    auto [lu, ru] = check_units(x[0], level, ctx);
    report.reports.push_back(std::move(lu));
    report.reports.push_back(std::move(ru));
    auto [ri, li] = check_inverses(x[0], level, ctx);
    report.reports.push_back(std::move(ri));
    report.reports.push_back(std::move(li));
  }
  return report;
}

}  // namespace pathrw
