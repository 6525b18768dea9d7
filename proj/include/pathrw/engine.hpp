#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathrw/context.hpp"
#include "pathrw/rules.hpp"
#include "pathrw/terms.hpp"

namespace pathrw {

// A finite, possibly empty chain of contractions and reversed
// contractions at one level.
struct Derivation {
  PathTerm start;
  std::vector<RewriteStep> steps;
  std::size_t level = 1;

  static Derivation empty_at(PathTerm start);

  const PathTerm& end() const { return steps.empty() ? start : steps.back().after; }
  bool empty() const { return steps.empty(); }

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Lexicographic termination measure: (size, sum over τ nodes of the
// size of their left child).
struct Measure {
  std::size_t size = 0;
  std::size_t left_weight = 0;

  friend auto operator<=>(const Measure&, const Measure&) = default;
};

Measure measure(const PathTerm& t);

// One forward contraction. Throws PathError(NoRedex) if `rule` does not
// match at `pos` or is not in `rs`.
std::pair<PathTerm, RewriteStep> contract_once(const PathTerm& t, const std::string& rule, const Position& pos,
                                               const RuleSet& rs, const Context& ctx);

// Contracts the first redex under `strategy` until none remains. The
// derivation has only forward steps. Throws std::runtime_error when
// `max_steps` is exceeded.
std::pair<PathTerm, Derivation> normalize(const PathTerm& t, const RuleSet& rs, const Context& ctx,
                                          Strategy strategy = Strategy::LeftmostInnermost,
                                          std::size_t max_steps = 1'000'000);

// Throws PathError(ChainMismatch) unless d1 ends where d2 starts.
Derivation concat_derivations(const Derivation& d1, const Derivation& d2);
Derivation invert_derivation(const Derivation& d);

// Lifts a level n derivation to a level n+1 path: ρ for the empty
// derivation, a step atom per forward step, σ(step atom) per reverse
// step, folded left to right with τ.
PathTerm derivation_to_path(const Derivation& d);
// Reads a lifted path back; throws std::invalid_argument for paths that
// are not built from step atoms, ρ, σ and τ.
Derivation path_to_derivation(const PathTerm& p);

bool replay_step(const RewriteStep& step, const RuleSet& rs, const Context& ctx);
bool replay_derivation(const Derivation& d, const RuleSet& rs, const Context& ctx);

// Terms available to reverse expansions for metavariables and objects
// that the contractum does not determine (e.g. r in ρ ◁_tr τ(r,σ(r))).
struct ExpansionPool {
  std::vector<PathTerm> generators;
  std::vector<Object> objects;
};

// Generators (atoms, step atoms, λ-formers) and endpoint objects of all
// subterms of `terms`.
ExpansionPool make_pool(const std::vector<PathTerm>& terms, const Context& ctx);

// All reverse steps from `t`: each result v satisfies v ▷ t at the
// recorded position.
std::vector<RewriteStep> reverse_expansions(const PathTerm& t, const RuleSet& rs, const Context& ctx,
                                            const ExpansionPool& pool);

// Replaces each extension-rule step by its chain of table-rule steps.
Derivation expand_extensions(const Derivation& d, const Context& ctx);

enum class Verdict { Equal, NotEqual, Unknown };

std::string_view to_string(Verdict v);

struct EqualityResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Derivation> witness;
  std::string reason;
};

struct DecideOptions {
  // With the oracle off, only the bounded witness search runs and
  // Unknown becomes reachable.
  bool use_oracle = true;
  Strategy strategy = Strategy::LeftmostInnermost;
  std::size_t node_budget = 200'000;
};

// Decides rw-equality of two terms of the same level. Equal carries a
// derivation from s to t using only rules of `rs`. Throws
// PathError(LevelMismatch).
EqualityResult decide_rw_equal(const PathTerm& s, const PathTerm& t, const RuleSet& rs, const Context& ctx,
                               std::size_t bound, const DecideOptions& options = {});

// Bidirectional breadth-first search over contractions and reverse
// expansions. `bound` caps the derivation length; terms larger than
// size(s) + size(t) + bound are not explored.
std::optional<Derivation> search_witness(const PathTerm& s, const PathTerm& t, const RuleSet& rs,
                                         const Context& ctx, std::size_t bound, std::size_t node_budget);

}  // namespace pathrw
