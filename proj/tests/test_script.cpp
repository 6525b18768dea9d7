#include <doctest.h>

#include "helpers.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/oracle.hpp"
#include "pathrw/script.hpp"
#include "pathrw/serialize.hpp"

using namespace testing;

namespace {

ScriptError error_of(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ScriptError& e) {
    return e;
  }
  FAIL("script parsed: " << text);
  throw std::logic_error("unreachable");
}

const char* kHeader = "type A\nelem a b c : A\nstep r : a = b\nstep s : b = c\n";

}  // namespace

TEST_SUITE("script") {

TEST_CASE("declarations and paths") {
  Script sc = parse_script("type A\nelem a b : A\nstep r : a = b\npath p := tau(r, sigma(r))");
  CHECK(sc.context.has_atom("r"));
  REQUIRE(sc.paths.size() == 1);
  CHECK(sc.path("p") == T(A("r"), S(A("r"))));
  auto [x, y] = endpoints(sc.path("p"), sc.context);
  CHECK(x == Object::element("a"));
  CHECK(y == Object::element("a"));
}

TEST_CASE("empty and comment-only input") {
  Script sc = parse_script("");
  CHECK(sc.paths.empty());
  CHECK(sc.context.types().empty());
  CHECK(parse_script("-- nothing\n\n   -- here\n").paths.empty());
}

TEST_CASE("named paths and Greek aliases") {
  Script sc = parse_script(std::string(kHeader) + "path p := τ(r, s)\npath q := σ(p)\npath u := ρ(a)\n");
  CHECK(sc.path("q") == S(T(A("r"), A("s"))));
  CHECK(sc.path("u") == R("a"));
}

TEST_CASE("λ declarations and congruence formers") {
  Script sc = parse_script(
      "type F\nelem f g n : F\nlam m := λx. f x : F\nstep e : m = f eta\nstep r : f = g\n"
      "path p := xi(x, r)\npath q := mu(n, r)\npath w := nu(r, \\y. y)\npath k := rho(\\z. n z)\n");
  CHECK(sc.path("p") == PathTerm::xi("x", A("r")));
  CHECK(sc.path("q") == PathTerm::mu(LambdaTerm::var("n"), A("r")));
  CHECK(sc.path("k").object().element().to_string() == "\\z. n z");
  CHECK(sc.context.atom("e").tag == AxiomTag::Eta);
}

TEST_CASE("errors carry kind and location") {
  ScriptError e = error_of("type A\nelem a b : A\nstep r : a = b\npath p := tau(r, r)");
  CHECK(e.kind() == ScriptErrorKind::TypeMismatch);
  CHECK(e.line() == 4);
  CHECK(e.column() == 11);

  e = error_of(std::string(kHeader) + "path p := tau(r, sigma(q))");
  CHECK(e.kind() == ScriptErrorKind::UndeclaredName);
  CHECK(e.line() == 5);
  CHECK(e.column() == 24);

  e = error_of(std::string(kHeader) + "path p := tau(s, tau(r, s))");
  CHECK(e.kind() == ScriptErrorKind::TypeMismatch);
  CHECK(e.column() == 11);

  e = error_of("type A\nelem a : B");
  CHECK(e.kind() == ScriptErrorKind::UndeclaredName);
  CHECK(e.line() == 2);
  CHECK(e.column() == 10);

  e = error_of("type A\ntype B\nelem a : A\nelem b : B\nstep r : a = b");
  CHECK(e.kind() == ScriptErrorKind::TypeMismatch);

  e = error_of("type A\nelem a b : A\nstep r : a = b beta");
  CHECK(e.kind() == ScriptErrorKind::NotAnAxiomInstance);

  e = error_of("type A\nelem a : A\nstep r : a = a\npath p := tau(r, r");
  CHECK(e.kind() == ScriptErrorKind::Syntax);

  e = error_of("type A\nelem a : A\nelem a : A");
  CHECK(e.kind() == ScriptErrorKind::Syntax);

  e = error_of("typo A");
  CHECK(e.kind() == ScriptErrorKind::Syntax);
  CHECK(e.column() == 1);

  e = error_of(std::string(kHeader) + "path p := tau(r, s) # x");
  CHECK(e.kind() == ScriptErrorKind::Syntax);
  CHECK(e.column() == 21);
}

TEST_CASE("step atoms must be contractions") {
  Script sc = parse_script(std::string(kHeader) + "path t := step(tlr, [], tau(rho(a), r), r)");
  CHECK(sc.path("t").level() == 2);
  ScriptError e = error_of(std::string(kHeader) + "path t := step(tlr, [], tau(rho(a), r), s)");
  CHECK(e.kind() == ScriptErrorKind::TypeMismatch);
}

TEST_CASE("print then parse is the identity on small terms") {
  Script sc = parse_script(kHeader);
  for (const auto& t : enumerate_terms(sc.context, 5)) CHECK(parse_path(to_string(t), sc.context) == t);
}

TEST_CASE("derivation documents replay on their own") {
  Context ctx = fork_ctx();
  PathTerm lhs = S(T(S(A("r")), A("s")));
  auto res = decide_rw_equal(lhs, T(S(A("s")), A("r")), RuleSet::paper7(), ctx, 20);
  REQUIRE(res.witness.has_value());
  std::string doc = derivation_document(*res.witness, ctx, "paper7");
  ReplayOutcome out = replay_document(doc);
  CHECK(out.ok);
  REQUIRE(out.derivation.has_value());
  CHECK(out.derivation->steps == res.witness->steps);

  std::string tampered = doc;
  tampered.replace(tampered.find("\"tsr\""), 5, "\"tr\"");
  CHECK_FALSE(replay_document(tampered).ok);
  CHECK_FALSE(replay_document("{").ok);
  CHECK_FALSE(replay_document("{\"format\": \"other\"}").ok);
}

TEST_CASE("level 2 documents replay") {
  Context ctx = chain_ctx();
  PathTerm x = T(T(R("a"), A("r")), R("b"));
  auto [nf, d] = normalize(x, RuleSet::paper7(), ctx);
  PathTerm lifted = derivation_to_path(d);
  auto [nf2, d2] = normalize(T(lifted, S(lifted)), RuleSet::paper7(), ctx);
  CHECK(nf2 == PathTerm::refl(Object(x)));
  ReplayOutcome out = replay_document(derivation_document(d2, ctx, "paper7"));
  CHECK(out.ok);
}

}  // TEST_SUITE
