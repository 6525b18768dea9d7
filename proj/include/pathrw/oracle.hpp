#pragma once

#include <string>
#include <vector>

#include "pathrw/context.hpp"
#include "pathrw/rules.hpp"
#include "pathrw/terms.hpp"

namespace pathrw {

// A generator read forwards (+) or backwards (-).
struct Letter {
  // Printed generator; λ-formers print their oracle-normalized body.
  std::string key;
  PathTerm generator;
  bool positive = true;

  friend bool operator==(const Letter& a, const Letter& b) { return a.positive == b.positive && a.key == b.key; }
};

// Free-groupoid normal form of a path: its source object and a fully
// cancelled list of letters.
struct ReducedWord {
  Object base;
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::string to_string() const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) {
    return a.base == b.base && a.letters == b.letters;
  }
};

// Requires `t` well-formed (throws PathError otherwise).
ReducedWord word(const PathTerm& t, const Context& ctx);
bool oracle_equal(const PathTerm& s, const PathTerm& t, const Context& ctx);

// ρ(base) for the empty word; otherwise the letters as a right-nested τ
// chain, with σ on negative letters.
PathTerm word_to_term(const ReducedWord& w);

// Every well-formed ρ/σ/τ term of size <= max_size, each once, ordered by
// size; within one size: generators, then ρ, then σ, then τ by the size
// of the left factor. Level 1 uses the atoms and elements of `ctx`;
// higher levels use `generators` (e.g. step atoms) and their endpoints.
std::vector<PathTerm> enumerate_terms(const Context& ctx, std::size_t max_size, std::size_t level = 1,
                                      const std::vector<PathTerm>& generators = {});

// A term with two one-step contracta whose normal forms differ.
struct Peak {
  PathTerm term;
  Redex left;
  Redex right;
  PathTerm left_normal;
  PathTerm right_normal;
};

std::vector<Peak> check_confluence(const RuleSet& rs, const Context& ctx, std::size_t max_size);

}  // namespace pathrw
