#include <doctest.h>

#include "helpers.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/error.hpp"

using namespace testing;

TEST_SUITE("terms") {

TEST_CASE("size counts nodes") {
  CHECK(A("r").size() == 1);
  CHECK(R("a").size() == 1);
  CHECK(S(A("r")).size() == 2);
  CHECK(T(R("a"), A("r")).size() == 3);
  CHECK(T(T(A("r"), S(A("r"))), A("s")).size() == 6);
}

TEST_CASE("endpoints") {
  Context ctx = chain_ctx();
  auto [x, y] = endpoints(T(A("r"), A("s")), ctx);
  CHECK(x == Object::element("a"));
  CHECK(y == Object::element("c"));
  auto [p, q] = endpoints(S(T(A("r"), A("s"))), ctx);
  CHECK(p == Object::element("c"));
  CHECK(q == Object::element("a"));
  auto e = endpoints(R("b"), ctx);
  CHECK(e.first == e.second);
}

TEST_CASE("endpoint mismatch reports the failing node") {
  Context ctx = chain_ctx();
  try {
    endpoints(T(A("s"), T(A("r"), A("r"))), ctx);
    FAIL("expected a mismatch");
  } catch (const PathError& e) {
    CHECK(e.kind() == ErrorKind::EndpointMismatch);
    CHECK(e.position() == Position{1});
  }
  try {
    endpoints(S(A("nope")), ctx);
    FAIL("expected unknown atom");
  } catch (const PathError& e) {
    CHECK(e.kind() == ErrorKind::UnknownAtom);
    CHECK(e.position() == Position{0});
  }
}

TEST_CASE("validate collects every violation") {
  Context ctx = chain_ctx();
  auto rep = validate(T(T(A("r"), A("r")), A("q")), ctx);
  CHECK_FALSE(rep.ok());
  REQUIRE(rep.violations.size() == 2);
  CHECK(rep.violations[0].kind == ViolationKind::EndpointMismatch);
  CHECK(rep.violations[0].position == Position{0});
  CHECK(rep.violations[1].kind == ViolationKind::UnknownAtom);
  CHECK(rep.violations[1].position == Position{1});
  CHECK(validate(T(A("r"), A("s")), ctx).ok());
}

TEST_CASE("levels are enforced") {
  Context ctx = chain_ctx();
  RewriteStep st{"tlr", {}, Direction::Forward, T(R("a"), A("r")), A("r"), 1};
  PathTerm theta = PathTerm::step(st);
  CHECK(theta.level() == 2);
  CHECK(PathTerm::refl(Object(A("r"))).level() == 2);
  CHECK_THROWS_AS(T(theta, A("r")), PathError);
  CHECK_THROWS_AS(PathTerm::xi("x", theta), PathError);
  auto [x, y] = endpoints(theta, ctx);
  CHECK(x == Object(T(R("a"), A("r"))));
  CHECK(y == Object(A("r")));
  CHECK(validate(theta, ctx).ok());

  RewriteStep bogus{"tlr", {}, Direction::Forward, T(R("a"), A("r")), A("s"), 1};
  auto rep = validate(PathTerm::step(bogus), ctx);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == ViolationKind::InvalidStep);
}

TEST_CASE("positions") {
  PathTerm t = T(S(A("r")), T(A("s"), R("c")));
  CHECK(subterm_at(t, {1, 0}) == A("s"));
  CHECK(subterm_at(t, {0, 0}) == A("r"));
  CHECK(replace_at(t, {1}, A("q")) == T(S(A("r")), A("q")));
  CHECK_THROWS_AS(subterm_at(t, {0, 1}), std::out_of_range);
  CHECK(replace_at(t, {}, A("q")) == A("q"));
}

TEST_CASE("equality and hashing are structural") {
  CHECK(T(A("r"), A("s")) == T(A("r"), A("s")));
  CHECK_FALSE(T(A("r"), A("s")) == T(A("s"), A("r")));
  CHECK(std::hash<PathTerm>{}(T(A("r"), S(A("s")))) == std::hash<PathTerm>{}(T(A("r"), S(A("s")))));
  CHECK_FALSE(R("a") == R("b"));
}

TEST_CASE("λ-congruence formers") {
  Context ctx;
  ctx.add_type("A");
  ctx.add_element("f", "A");
  ctx.add_element("g", "A");
  ctx.add_element("n", "A");
  ctx.add_atom({"r", "f", "g", "A"});
  auto [s1, t1] = endpoints(PathTerm::xi("x", A("r")), ctx);
  CHECK(s1.element().to_string() == "\\x. f");
  auto [s2, t2] = endpoints(PathTerm::mu(LambdaTerm::var("n"), A("r")), ctx);
  CHECK(s2.element().to_string() == "n f");
  CHECK(t2.element().to_string() == "n g");
  auto [s3, t3] = endpoints(PathTerm::nu(A("r"), LambdaTerm::var("n")), ctx);
  CHECK(s3.element().to_string() == "f n");
  CHECK(t3.element().to_string() == "g n");
}

TEST_CASE("printing uses the script syntax") {
  CHECK(to_string(T(S(A("r")), R("a"))) == "tau(sigma(r), rho(a))");
  RewriteStep st{"tlr", {}, Direction::Forward, T(R("a"), A("r")), A("r"), 1};
  CHECK(to_string(PathTerm::step(st)) == "step(tlr, [], tau(rho(a), r), r)");
}

}  // TEST_SUITE
