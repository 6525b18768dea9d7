#include <doctest.h>

#include <map>
#include <set>
#include <unordered_set>

#include "helpers.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/oracle.hpp"

using namespace testing;

namespace {

// Well-formed ρ/σ/τ terms counted by size over (source, target) element
// pairs, built from the declared atoms alone.
std::vector<std::size_t> count_by_size(const Context& ctx, std::size_t max) {
  const auto& els = ctx.element_names();
  std::size_t n = els.size();
  auto idx = [&](const std::string& e) { return std::find(els.begin(), els.end(), e) - els.begin(); };
  std::vector<std::vector<std::vector<std::size_t>>> c(max + 1, std::vector<std::vector<std::size_t>>(n, std::vector<std::size_t>(n)));
  for (const auto& a : ctx.atoms()) ++c[1][idx(a.source)][idx(a.target)];
  for (std::size_t i = 0; i < n; ++i) ++c[1][i][i];
  for (std::size_t k = 2; k <= max; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        c[k][x][y] += c[k - 1][y][x];
        for (std::size_t l = 1; l + 2 <= k; ++l) {
          for (std::size_t m = 0; m < n; ++m) c[k][x][y] += c[l][x][m] * c[k - 1 - l][m][y];
        }
      }
    }
  }
  std::vector<std::size_t> out(max + 1);
  for (std::size_t k = 1; k <= max; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) out[k] += c[k][x][y];
    }
  }
  return out;
}

std::vector<std::size_t> sizes_of(const std::vector<PathTerm>& ts, std::size_t max) {
  std::vector<std::size_t> out(max + 1);
  for (const auto& t : ts) ++out[t.size()];
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("words") {
  Context ctx = chain_ctx();
  CHECK(word(T(A("r"), S(A("r"))), ctx).empty());
  CHECK(word(T(A("r"), S(A("r"))), ctx).base == Object::element("a"));
  CHECK(word(R("a"), ctx).empty());
  ReducedWord w = word(T(T(A("r"), A("s")), S(A("s"))), ctx);
  REQUIRE(w.letters.size() == 1);
  CHECK(w.letters[0].key == "r");
  CHECK(w.letters[0].positive);
  CHECK(word_to_term(w) == A("r"));
  CHECK(word_to_term(word(S(T(A("r"), A("s"))), ctx)) == T(S(A("s")), S(A("r"))));
  CHECK_FALSE(word(R("a"), ctx) == word(R("b"), ctx));
}

TEST_CASE("oracle_equal") {
  Context ctx = fork_ctx();
  CHECK(oracle_equal(T(A("r"), T(S(A("r")), A("s"))), A("s"), ctx));
  CHECK_FALSE(oracle_equal(A("r"), S(A("r")), ctx));
  CHECK(oracle_equal(A("r"), A("r"), ctx));
}

TEST_CASE("λ-former letters are opaque but normalized inside") {
  Context ctx;
  ctx.add_type("A");
  for (auto e : {"f", "g"}) ctx.add_element(e, "A");
  ctx.add_atom({"r", "f", "g", "A"});
  PathTerm x1 = PathTerm::xi("x", T(A("r"), T(S(A("r")), A("r"))));
  PathTerm x2 = PathTerm::xi("x", A("r"));
  CHECK(oracle_equal(x1, x2, ctx));
  CHECK(oracle_equal(T(x1, S(x2)), PathTerm::refl(endpoints(x1, ctx).first), ctx));
  CHECK_FALSE(oracle_equal(S(x2), PathTerm::xi("x", S(A("r"))), ctx));
  auto [nf, d] = normalize(x1, RuleSet::groupoid_complete(), ctx);
  CHECK(nf == word_to_term(word(x1, ctx)));
}

TEST_CASE("enumeration counts match an independent counter") {
  Context ctx = chain_ctx();
  // Frozen from the counter below.
  const std::vector<std::size_t> frozen = {0, 5, 5, 13, 31, 79, 237, 636, 2030};
  CHECK(count_by_size(ctx, 8) == frozen);
  auto terms = enumerate_terms(ctx, 8);
  CHECK(sizes_of(terms, 8) == frozen);
  std::unordered_set<PathTerm> unique(terms.begin(), terms.end());
  CHECK(unique.size() == terms.size());
  for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i - 1].size() <= terms[i].size());
  for (const auto& t : terms) CHECK(validate(t, ctx).ok());
  CHECK(count_by_size(fork_ctx(), 8) == sizes_of(enumerate_terms(fork_ctx(), 8), 8));
}

TEST_CASE("enumeration edge cases") {
  Context ctx;
  ctx.add_type("A");
  ctx.add_element("a", "A");
  ctx.add_element("b", "A");
  ctx.add_atom({"r", "a", "b", "A"});
  auto one = enumerate_terms(ctx, 1);
  CHECK(one == std::vector<PathTerm>{A("r"), R("a"), R("b")});
  auto two = enumerate_terms(ctx, 2);
  CHECK(two.size() == 6);
  CHECK(two[3] == S(A("r")));
  CHECK(enumerate_terms(ctx, 0).empty());
  // The smallest τ has size 3.
  auto three = enumerate_terms(ctx, 3);
  CHECK(std::find(three.begin(), three.end(), T(R("a"), A("r"))) != three.end());
}

TEST_CASE("enumeration above level 1 uses supplied generators") {
  Context ctx = chain_ctx();
  RewriteStep st{"tlr", {}, Direction::Forward, T(R("a"), A("r")), A("r"), 1};
  PathTerm theta = PathTerm::step(st);
  auto ts = enumerate_terms(ctx, 3, 2, {theta});
  // θ, ρ(x), ρ(y); their σ; σσ and the four composable τ pairs.
  CHECK(ts.size() == 3 + 3 + 7);
  for (const auto& t : ts) {
    CHECK(t.level() == 2);
    CHECK(validate(t, ctx).ok());
  }
}

TEST_CASE("every rule instance keeps the word") {
  Context ctx = chain_ctx();
  const RuleSet& gc = RuleSet::groupoid_complete();
  for (const auto& t : enumerate_terms(ctx, 8)) {
    for (const auto& r : match_redexes(gc, t)) {
      auto [u, step] = contract_once(t, r.rule, r.position, gc, ctx);
      CHECK(word(u, ctx) == word(t, ctx));
    }
  }
}

TEST_CASE("groupoid-complete normal forms are read-back words") {
  Context ctx = chain_ctx();
  for (const auto& t : enumerate_terms(ctx, 8)) {
    auto [nf, d] = normalize(t, RuleSet::groupoid_complete(), ctx);
    CAPTURE(to_string(t));
    CHECK(nf == word_to_term(word(t, ctx)));
  }
}

TEST_CASE("confluence") {
  Context fork = fork_ctx();
  auto peaks = check_confluence(RuleSet::paper7(), fork, 7);
  bool found = false;
  for (const auto& p : peaks) {
    if (p.term == T(T(A("r"), S(A("r"))), A("s"))) {
      found = true;
      bool forms = (p.left_normal == A("s") && p.right_normal == T(A("r"), T(S(A("r")), A("s")))) ||
                   (p.right_normal == A("s") && p.left_normal == T(A("r"), T(S(A("r")), A("s"))));
      CHECK(forms);
      CHECK(oracle_equal(p.left_normal, p.right_normal, fork));
    }
  }
  CHECK(found);
  CHECK(check_confluence(RuleSet::groupoid_complete(), fork, 7).empty());

  Context chain = chain_ctx();
  CHECK_FALSE(check_confluence(RuleSet::paper7(), chain, 7).empty());
  CHECK(check_confluence(RuleSet::groupoid_complete(), chain, 7).empty());
  CHECK(check_confluence(RuleSet::paper7(), chain, 1).empty());
}

}  // TEST_SUITE
