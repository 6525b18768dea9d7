#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathrw/context.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/terms.hpp"

namespace pathrw {

// r ∘ s = τ(s, r): composes `first` then `second`. Throws
// PathError(EndpointMismatch) unless target(first) = source(second).
PathTerm compose(const PathTerm& first, const PathTerm& second, const Context& ctx);

// left-unit:     τ(ρ_src(s), s) = s      (tlr)
// right-unit:    τ(s, ρ_tgt(s)) = s      (trr)
// right-inverse: τ(s, σ(s)) = ρ_src(s)   (tr)
// left-inverse:  τ(σ(s), s) = ρ_tgt(s)   (tsr)
enum class Law { Assoc, LeftUnit, RightUnit, LeftInverse, RightInverse };

std::string_view to_string(Law law);

struct LawReport {
  Law law = Law::Assoc;
  std::size_t level = 1;
  std::vector<PathTerm> sample;
  PathTerm lhs;
  PathTerm rhs;
  Derivation witness;
  // Witness replays, runs from lhs to rhs, and uses only rules at `level`.
  bool verified = false;
};

LawReport check_assoc(const PathTerm& s, const PathTerm& r, const PathTerm& t, std::size_t level,
                      const Context& ctx);
// (left-unit, right-unit)
std::pair<LawReport, LawReport> check_units(const PathTerm& s, std::size_t level, const Context& ctx);
// (right-inverse, left-inverse)
std::pair<LawReport, LawReport> check_inverses(const PathTerm& s, std::size_t level, const Context& ctx);

struct SuiteReport {
  std::size_t level = 1;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<LawReport> reports;  // five per sample, in sample order

  std::size_t passed() const;
  std::size_t failed() const;
};

// Draws `samples` composable triples (s, r, t) at `level` and checks all
// five laws on each. Level n > 1 arrows are lifted witnesses of
// rw_{n-1}-equalities between terms reached by random walks from one base
// term fixed for the run. Requires at least one atom in `ctx`.
SuiteReport run_laws(const Context& ctx, std::size_t level, std::size_t samples, std::uint64_t seed);

}  // namespace pathrw
