#include <doctest.h>

#include "helpers.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/error.hpp"
#include "pathrw/rules.hpp"

using namespace testing;

namespace {

PathTerm root(const std::string& rule, const PathTerm& t, const Context& ctx) {
  auto out = apply_at_root(*RuleSet::groupoid_complete().find(rule), t, ctx);
  REQUIRE(out.has_value());
  return *out;
}

}  // namespace

TEST_SUITE("rules") {

TEST_CASE("the seven table rules contract at the root") {
  Context ctx = chain_ctx();
  PathTerm r = A("r"), s = A("s");
  CHECK(root("sr", S(R("a")), ctx) == R("a"));
  CHECK(root("ss", S(S(r)), ctx) == r);
  CHECK(root("tr", T(r, S(r)), ctx) == R("a"));
  CHECK(root("tsr", T(S(r), r), ctx) == R("b"));
  CHECK(root("trr", T(r, R("b")), ctx) == r);
  CHECK(root("tlr", T(R("a"), r), ctx) == r);
  CHECK(root("tt", T(T(r, s), S(s)), ctx) == T(r, T(s, S(s))));
}

TEST_CASE("non-linear patterns need equal subterms") {
  Context ctx = chain_ctx();
  auto tr = *RuleSet::paper7().find("tr");
  CHECK_FALSE(apply_at_root(tr, T(A("r"), S(A("s"))), ctx).has_value());
  CHECK_FALSE(apply_at_root(tr, T(A("r"), A("r")), ctx).has_value());
}

TEST_CASE("rules act only at their own level") {
  Context ctx = chain_ctx();
  auto tlr2 = *RuleSet::paper7().find("tlr_2");
  CHECK(tlr2.level == 2);
  CHECK_FALSE(apply_at_root(tlr2, T(R("a"), A("r")), ctx).has_value());
  RewriteStep st{"tlr", {}, Direction::Forward, T(R("a"), A("r")), A("r"), 1};
  PathTerm theta = PathTerm::step(st);
  PathTerm lhs = T(PathTerm::refl(Object(T(R("a"), A("r")))), theta);
  CHECK(apply_at_root(tlr2, lhs, ctx) == theta);
}

TEST_CASE("rule names") {
  CHECK(rule_name("tt", 1) == "tt");
  CHECK(rule_name("tt", 3) == "tt_3");
  CHECK(parse_rule_name("tsr_2") == std::pair<std::string, std::size_t>{"tsr", 2});
  CHECK(parse_rule_name("tr") == std::pair<std::string, std::size_t>{"tr", 1});
  CHECK_THROWS_AS(parse_rule_name("tt_"), PathError);
  CHECK_THROWS_AS(parse_rule_name("tt_0"), PathError);
  CHECK_FALSE(RuleSet::paper7().find("st").has_value());
  CHECK(RuleSet::groupoid_complete().find("st_2").has_value());
  CHECK_THROWS_AS(RuleSet::by_name("other"), std::invalid_argument);
}

TEST_CASE("redexes are listed leftmost-innermost") {
  PathTerm t = T(T(A("r"), S(A("r"))), A("s"));
  auto rs = match_redexes(RuleSet::paper7(), t);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == Redex{"tr", {0}});
  CHECK(rs[1] == Redex{"tt", {}});
  CHECK(first_redex(RuleSet::paper7(), t) == Redex{"tr", {0}});
  CHECK(first_redex(RuleSet::paper7(), t, Strategy::LeftmostOutermost) == Redex{"tt", {}});
  CHECK_FALSE(first_redex(RuleSet::paper7(), T(A("r"), A("s"))).has_value());
}

TEST_CASE("extension scripts are paper7 derivations") {
  Context ctx = fork_ctx();
  PathTerm r = A("r"), s = A("s");
  // st: σ(τ(σr, s)) ▷ τ(σs, σσr)
  std::vector<std::pair<std::string, PathTerm>> cases = {
      {"st", S(T(S(r), s))},
      {"ttr", T(r, T(S(r), s))},
      {"ttsr", T(S(r), T(r, S(r)))},
  };
  for (const auto& [rule, lhs] : cases) {
    CAPTURE(rule);
    auto [rhs, step] = contract_once(lhs, rule, {}, RuleSet::groupoid_complete(), ctx);
    Derivation one{lhs, {step}, 1};
    Derivation expanded = expand_extensions(one, ctx);
    CHECK(expanded.steps.size() > 1);
    CHECK(expanded.end() == rhs);
    CHECK(replay_derivation(expanded, RuleSet::paper7(), ctx));
    CHECK_FALSE(replay_derivation(one, RuleSet::paper7(), ctx));

    Derivation back = expand_extensions(invert_derivation(one), ctx);
    CHECK(back.start == rhs);
    CHECK(back.end() == lhs);
    CHECK(replay_derivation(back, RuleSet::paper7(), ctx));
  }
}

TEST_CASE("explanations") {
  std::string sr = explain_rule("sr");
  CHECK(sr.find("x =_{σ(ρ)} x : A ▷_sr x =_ρ x : A") != std::string::npos);
  std::string tt = explain_rule("tt");
  CHECK(tt.find("Redex derivation") != std::string::npos);
  CHECK(tt.find("Contractum derivation") != std::string::npos);
  CHECK(tt.find("x =_{τ(τ(t,r),s)} z : A ▷_tt x =_{τ(t,τ(r,s))} z : A") != std::string::npos);
  CHECK(explain_rule("tr_2").find("level 2") != std::string::npos);
  CHECK(explain_rule("st").find("▷_tsr") != std::string::npos);
  CHECK_THROWS_AS(explain_rule("zz"), PathError);
}

}  // TEST_SUITE
