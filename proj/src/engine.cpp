#include "pathrw/engine.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "pathrw/error.hpp"
#include "pathrw/oracle.hpp"

namespace pathrw {

Derivation Derivation::empty_at(PathTerm start) {
  std::size_t level = start.level();
  return Derivation{std::move(start), {}, level};
}

namespace {

void accumulate_measure(const PathTerm& t, Measure& m) {
  if (t.is(PathKind::Trans)) m.left_weight += t.left().size();
  for (std::size_t i = 0; i < t.arity(); ++i) accumulate_measure(t.child(i), m);
}

}  // namespace

Measure measure(const PathTerm& t) {
  Measure m;
  m.size = t.size();
  accumulate_measure(t, m);
  return m;
}

std::pair<PathTerm, RewriteStep> contract_once(const PathTerm& t, const std::string& rule, const Position& pos,
                                               const RuleSet& rs, const Context& ctx) {
  auto schema = rs.find(rule);
  if (!schema) throw PathError(ErrorKind::NoRedex, "rule " + rule + " is not in rule set " + rs.name(), pos);
  if (schema->level != t.level()) {
    throw PathError(ErrorKind::NoRedex,
                    "rule " + rule + " acts on level " + std::to_string(schema->level) + " terms, not level " +
                        std::to_string(t.level()),
                    pos);
  }
  const PathTerm* sub = nullptr;
  try {
    sub = &subterm_at(t, pos);
  } catch (const std::out_of_range&) {
    throw PathError(ErrorKind::NoRedex, "position " + position_to_string(pos) + " is outside the term", pos);
  }
  auto contractum = apply_at_root(*schema, *sub, ctx);
  if (!contractum) {
    throw PathError(ErrorKind::NoRedex, rule + " does not match " + to_string(*sub) + " at " + position_to_string(pos),
                    pos);
  }
  PathTerm after = replace_at(t, pos, std::move(*contractum));
  RewriteStep step{schema->name(), pos, Direction::Forward, t, after, t.level()};
  return {std::move(after), std::move(step)};
}

std::pair<PathTerm, Derivation> normalize(const PathTerm& t, const RuleSet& rs, const Context& ctx,
                                          Strategy strategy, std::size_t max_steps) {
  Derivation d = Derivation::empty_at(t);
  PathTerm cur = t;
  while (auto redex = first_redex(rs, cur, strategy)) {
    if (d.steps.size() >= max_steps) {
      throw std::runtime_error("normalization exceeded " + std::to_string(max_steps) + " steps on " + to_string(t));
    }
    auto [next, step] = contract_once(cur, redex->rule, redex->position, rs, ctx);
    d.steps.push_back(std::move(step));
    cur = std::move(next);
  }
  return {std::move(cur), std::move(d)};
}

Derivation concat_derivations(const Derivation& d1, const Derivation& d2) {
  if (d1.level != d2.level) {
    throw PathError(ErrorKind::ChainMismatch, "cannot concatenate derivations at levels " +
                                                  std::to_string(d1.level) + " and " + std::to_string(d2.level));
  }
  if (!(d1.end() == d2.start)) {
    throw PathError(ErrorKind::ChainMismatch,
                    "first derivation ends at " + to_string(d1.end()) + " but second starts at " + to_string(d2.start));
  }
  Derivation out = d1;
  out.steps.insert(out.steps.end(), d2.steps.begin(), d2.steps.end());
  return out;
}

Derivation invert_derivation(const Derivation& d) {
  Derivation out{d.end(), {}, d.level};
  out.steps.reserve(d.steps.size());
  for (auto it = d.steps.rbegin(); it != d.steps.rend(); ++it) out.steps.push_back(it->flipped());
  return out;
}

PathTerm derivation_to_path(const Derivation& d) {
  if (d.steps.empty()) return PathTerm::refl(Object(d.start));
  auto lift = [](const RewriteStep& s) {
    return s.direction == Direction::Forward ? PathTerm::step(s) : PathTerm::sym(PathTerm::step(s.flipped()));
  };
  PathTerm acc = lift(d.steps.front());
  for (std::size_t i = 1; i < d.steps.size(); ++i) acc = PathTerm::trans(std::move(acc), lift(d.steps[i]));
  return acc;
}

Derivation path_to_derivation(const PathTerm& p) {
  switch (p.kind()) {
    case PathKind::Refl:
      if (p.object().is_element()) throw std::invalid_argument("reflexivity on an element is not a derivation");
      return Derivation::empty_at(p.object().path());
    case PathKind::Step:
      return Derivation{p.step().before, {p.step()}, p.step().level};
    case PathKind::Sym:
      return invert_derivation(path_to_derivation(p.sub()));
    case PathKind::Trans:
      return concat_derivations(path_to_derivation(p.left()), path_to_derivation(p.right()));
    default:
      throw std::invalid_argument("not a lifted derivation: " + to_string(p));
  }
}

bool replay_step(const RewriteStep& step, const RuleSet& rs, const Context& ctx) {
  try {
    if (step.before.level() != step.level || step.after.level() != step.level) return false;
    auto schema = rs.find(step.rule);
    if (!schema || schema->level != step.level) return false;
    bool fwd = step.direction == Direction::Forward;
    const PathTerm& host = fwd ? step.before : step.after;
    const PathTerm& expected = fwd ? step.after : step.before;
    auto contractum = apply_at_root(*schema, subterm_at(host, step.position), ctx);
    return contractum && replace_at(host, step.position, std::move(*contractum)) == expected;
  } catch (const std::exception&) {
    return false;
  }
}

bool replay_derivation(const Derivation& d, const RuleSet& rs, const Context& ctx) {
  if (d.start.level() != d.level) return false;
  try {
    endpoints(d.start, ctx);
  } catch (const PathError&) {
    return false;
  }
  const PathTerm* prev = &d.start;
  for (const auto& s : d.steps) {
    if (s.level != d.level || !(s.before == *prev) || !replay_step(s, rs, ctx)) return false;
    prev = &s.after;
  }
  return true;
}

namespace {

bool is_generator(const PathTerm& t) {
  switch (t.kind()) {
    case PathKind::Atom:
    case PathKind::Step:
    case PathKind::Xi:
    case PathKind::Mu:
    case PathKind::Nu:
      return true;
    default:
      return false;
  }
}

void pool_walk(const PathTerm& t, const Context& ctx, ExpansionPool& pool, std::unordered_set<PathTerm>& seen_terms,
               std::unordered_set<std::size_t>& seen_objects) {
  if (!seen_terms.insert(t).second) return;
  if (is_generator(t)) pool.generators.push_back(t);
  try {
    auto [a, b] = endpoints(t, ctx);
    for (auto* o : {&a, &b}) {
      bool dup = false;
      if (!seen_objects.insert(o->hash()).second) {
        dup = std::any_of(pool.objects.begin(), pool.objects.end(), [&](const Object& x) { return x == *o; });
      }
      if (!dup) pool.objects.push_back(*o);
    }
  } catch (const PathError&) {
  }
  for (std::size_t i = 0; i < t.arity(); ++i) pool_walk(t.child(i), ctx, pool, seen_terms, seen_objects);
}

void lhs_free_vars(const Pattern& p, const Bindings& b, std::vector<std::string>& terms,
                   std::vector<std::string>& objects) {
  switch (p.kind) {
    case Pattern::Kind::Var:
      if (!b.terms.count(p.name) && std::find(terms.begin(), terms.end(), p.name) == terms.end()) {
        terms.push_back(p.name);
      }
      return;
    case Pattern::Kind::Refl:
      if (p.ref == ObjectRef::Bound && !b.objects.count(p.name) &&
          std::find(objects.begin(), objects.end(), p.name) == objects.end()) {
        objects.push_back(p.name);
      }
      return;
    default:
      for (const auto& k : p.kids) lhs_free_vars(k, b, terms, objects);
  }
}

void expansions_at(const PathTerm& root, const PathTerm& v, Position& pos, const RuleSet& rs, const Context& ctx,
                   const ExpansionPool& pool, std::vector<RewriteStep>& out) {
  for (const auto& schema0 : rs.schemas()) {
    Bindings base;
    if (!match_into(schema0.rhs, v, base)) continue;
    RuleSchema schema = instantiate_at_level(schema0, v.level());
    std::vector<std::string> term_vars, object_vars;
    lhs_free_vars(schema.lhs, base, term_vars, object_vars);

    std::vector<PathTerm> gens;
    for (const auto& g : pool.generators) {
      if (g.level() == v.level()) gens.push_back(g);
    }
    std::vector<Object> objs;
    for (const auto& o : pool.objects) {
      if (o.level() + 1 == v.level()) objs.push_back(o);
    }
    std::vector<std::size_t> choice(term_vars.size() + object_vars.size(), 0);
    auto limit = [&](std::size_t i) { return i < term_vars.size() ? gens.size() : objs.size(); };
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (limit(i) == 0) goto next_schema;
    }
    while (true) {
      Bindings b = base;
      for (std::size_t i = 0; i < term_vars.size(); ++i) b.terms.insert_or_assign(term_vars[i], gens[choice[i]]);
      for (std::size_t i = 0; i < object_vars.size(); ++i) {
        b.objects.insert_or_assign(object_vars[i], objs[choice[term_vars.size() + i]]);
      }
      try {
        PathTerm candidate = instantiate(schema.lhs, b, ctx);
        endpoints(candidate, ctx);
        auto back = apply_at_root(schema, candidate, ctx);
        if (back && *back == v) {
          out.push_back(RewriteStep{schema.name(), pos, Direction::Reverse, root,
                                    replace_at(root, pos, std::move(candidate)), root.level()});
        }
      } catch (const PathError&) {
      }
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == limit(i)) choice[i++] = 0;
      if (i == choice.size()) break;
    }
  next_schema:;
  }
  for (std::size_t i = 0; i < v.arity(); ++i) {
    pos.push_back(i);
    expansions_at(root, v.child(i), pos, rs, ctx, pool, out);
    pos.pop_back();
  }
}

}  // namespace

ExpansionPool make_pool(const std::vector<PathTerm>& terms, const Context& ctx) {
  ExpansionPool pool;
  std::unordered_set<PathTerm> seen_terms;
  std::unordered_set<std::size_t> seen_objects;
  for (const auto& t : terms) pool_walk(t, ctx, pool, seen_terms, seen_objects);
  return pool;
}

std::vector<RewriteStep> reverse_expansions(const PathTerm& t, const RuleSet& rs, const Context& ctx,
                                            const ExpansionPool& pool) {
  std::vector<RewriteStep> out;
  Position pos;
  expansions_at(t, t, pos, rs, ctx, pool, out);
  return out;
}

Derivation expand_extensions(const Derivation& d, const Context& ctx) {
  Derivation out{d.start, {}, d.level};
  for (const auto& step : d.steps) {
    auto schema = RuleSet::groupoid_complete().find(step.rule);
    if (!schema || !schema->extension) {
      out.steps.push_back(step);
      continue;
    }
    RewriteStep fwd = step.direction == Direction::Forward ? step : step.flipped();
    auto b = match(schema->lhs, subterm_at(fwd.before, fwd.position));
    if (!b) throw std::logic_error("extension step does not match its own rule: " + to_string(step));
    Derivation chain = Derivation::empty_at(fwd.before);
    PathTerm cur = fwd.before;
    for (const auto& s : schema->derivation) {
      PathTerm next = replace_at(cur, fwd.position, instantiate(s.result, *b, ctx));
      Position pos = fwd.position;
      pos.insert(pos.end(), s.local.begin(), s.local.end());
      chain.steps.push_back(RewriteStep{rule_name(s.rule, step.level), pos, s.direction, cur, next, step.level});
      cur = std::move(next);
    }
    if (!(cur == fwd.after)) throw std::logic_error("extension script does not reach the contractum");
    if (step.direction == Direction::Reverse) chain = invert_derivation(chain);
    out.steps.insert(out.steps.end(), chain.steps.begin(), chain.steps.end());
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::NotEqual: return "NotEqual";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::vector<RewriteStep> neighbours(const PathTerm& u, const RuleSet& rs, const Context& ctx,
                                    const ExpansionPool& pool) {
  std::vector<RewriteStep> out;
  for (const auto& r : match_redexes(rs, u)) {
    try {
      out.push_back(contract_once(u, r.rule, r.position, rs, ctx).second);
    } catch (const PathError&) {
    }
  }
  auto rev = reverse_expansions(u, rs, ctx, pool);
  out.insert(out.end(), std::make_move_iterator(rev.begin()), std::make_move_iterator(rev.end()));
  return out;
}

using Parents = std::unordered_map<PathTerm, std::optional<RewriteStep>>;

std::vector<RewriteStep> trace_back(const Parents& parents, const PathTerm& from) {
  std::vector<RewriteStep> out;
  const PathTerm* cur = &from;
  while (true) {
    const auto& p = parents.at(*cur);
    if (!p) break;
    out.push_back(*p);
    cur = &p->before;
  }
  return out;
}

}  // namespace

std::optional<Derivation> search_witness(const PathTerm& s, const PathTerm& t, const RuleSet& rs,
                                         const Context& ctx, std::size_t bound, std::size_t node_budget) {
  if (s == t) return Derivation::empty_at(s);
  const std::size_t cap = s.size() + t.size() + bound;
  ExpansionPool pool = make_pool({s, t}, ctx);

  Parents from_s, from_t;
  from_s.emplace(s, std::nullopt);
  from_t.emplace(t, std::nullopt);
  std::vector<PathTerm> frontier_s{s}, frontier_t{t};
  std::size_t depth_s = 0, depth_t = 0;

  auto join = [&](const PathTerm& meet) {
    auto left = trace_back(from_s, meet);
    std::reverse(left.begin(), left.end());
    Derivation d{s, std::move(left), s.level()};
    for (const auto& step : trace_back(from_t, meet)) d.steps.push_back(step.flipped());
    return d;
  };

  while (depth_s + depth_t < bound && !frontier_s.empty() && !frontier_t.empty()) {
    bool grow_s = frontier_s.size() <= frontier_t.size();
    auto& frontier = grow_s ? frontier_s : frontier_t;
    auto& own = grow_s ? from_s : from_t;
    auto& other = grow_s ? from_t : from_s;
    std::vector<PathTerm> next;
    for (const auto& u : frontier) {
      for (auto& step : neighbours(u, rs, ctx, pool)) {
        if (step.after.size() > cap || own.count(step.after)) continue;
        PathTerm v = step.after;
        own.emplace(v, std::move(step));
        if (other.count(v)) return join(v);
        next.push_back(std::move(v));
        if (from_s.size() + from_t.size() > node_budget) return std::nullopt;
      }
    }
    frontier = std::move(next);
    ++(grow_s ? depth_s : depth_t);
  }
  return std::nullopt;
}

EqualityResult decide_rw_equal(const PathTerm& s, const PathTerm& t, const RuleSet& rs, const Context& ctx,
                               std::size_t bound, const DecideOptions& options) {
  if (s.level() != t.level()) {
    throw PathError(ErrorKind::LevelMismatch, "cannot compare a level " + std::to_string(s.level()) +
                                                  " term with a level " + std::to_string(t.level()) + " term");
  }
  if (s == t) return {Verdict::Equal, Derivation::empty_at(s), "identical terms"};

  Endpoints es = endpoints(s, ctx);
  Endpoints et = endpoints(t, ctx);
  if (!(es == et)) {
    return {Verdict::NotEqual, std::nullopt,
            "endpoint mismatch: " + es.first.to_string() + " -> " + es.second.to_string() + " versus " +
                et.first.to_string() + " -> " + et.second.to_string()};
  }

  if (!options.use_oracle) {
    if (auto w = search_witness(s, t, rs, ctx, bound, options.node_budget)) {
      return {Verdict::Equal, std::move(w), "witness found by search"};
    }
    return {Verdict::Unknown, std::nullopt, "search exhausted its bound without a witness"};
  }

  ReducedWord ws = word(s, ctx);
  ReducedWord wt = word(t, ctx);
  if (!(ws == wt)) {
    return {Verdict::NotEqual, std::nullopt, "reduced words differ: " + ws.to_string() + " versus " + wt.to_string()};
  }

  auto [ns, ds] = normalize(s, rs, ctx, options.strategy);
  auto [nt, dt] = normalize(t, rs, ctx, options.strategy);
  if (ns == nt) {
    return {Verdict::Equal, concat_derivations(ds, invert_derivation(dt)), "joined by normalization"};
  }

  bool has_table = std::all_of(table_rule_names().begin(), table_rule_names().end(),
                               [&](const std::string& n) { return rs.find(n).has_value(); });
  if (has_table) {
    const RuleSet& gc = RuleSet::groupoid_complete();
    auto [gs, es2] = normalize(s, gc, ctx, options.strategy);
    auto [gt, et2] = normalize(t, gc, ctx, options.strategy);
    if (gs == gt) {
      Derivation d = concat_derivations(es2, invert_derivation(et2));
      if (!rs.has_extensions()) d = expand_extensions(d, ctx);
      return {Verdict::Equal, std::move(d), "joined by groupoid normal forms"};
    }
  }
  if (auto w = search_witness(s, t, rs, ctx, bound, options.node_budget)) {
    return {Verdict::Equal, std::move(w), "witness found by search"};
  }
  return {Verdict::Unknown, std::nullopt, "reduced words agree but no witness was found within the bound"};
}

}  // namespace pathrw
