// Acceptance run: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "pathrw/engine.hpp"
#include "pathrw/groupoid.hpp"
#include "pathrw/lambda.hpp"
#include "pathrw/oracle.hpp"
#include "pathrw/script.hpp"
#include "pathrw/serialize.hpp"

using namespace testing;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void run(int id, const char* name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %d %s (%s%.2fs)\n", out.ok ? "PASS" : "FAIL", id, name, out.detail.str().c_str(), secs);
  std::fflush(stdout);
  failures += !out.ok;
}

bool has_trans(const PathTerm& t) {
  switch (t.kind()) {
    case PathKind::Trans:
      return true;
    case PathKind::Sym:
      return has_trans(t.child(0));
    default:
      return false;
  }
}

void rule_table(Outcome& o) {
  Context ctx = chain_ctx();
  const RuleSet& rs = RuleSet::paper7();
  PathTerm r = A("r"), s = A("s");
  struct Case {
    const char* rule;
    PathTerm lhs, rhs;
  };
  std::vector<Case> cases = {
      {"sr", S(R("a")), R("a")},
      {"ss", S(S(r)), r},
      {"tr", T(r, S(r)), R("a")},
      {"tsr", T(S(r), r), R("b")},
      {"trr", T(r, R("b")), r},
      {"tlr", T(R("a"), r), r},
      {"tt", T(T(r, s), S(s)), T(r, T(s, S(s)))},
  };
  for (const auto& c : cases) {
    auto got = apply_at_root(*rs.find(c.rule), c.lhs, ctx);
    o.expect(got && *got == c.rhs, c.rule);
  }
  o.detail << cases.size() << " goldens; ";
}

void termination(Outcome& o) {
  Context ctx = chain_ctx();
  auto terms = enumerate_terms(ctx, 12);
  std::size_t steps = 0;
  for (const auto& t : terms) {
    auto [nf, d] = normalize(t, RuleSet::paper7(), ctx);
    for (const auto& s : d.steps) o.expect(measure(s.after) < measure(s.before), to_string(s.before));
    o.expect(!first_redex(RuleSet::paper7(), nf).has_value(), "normal form " + to_string(nf));
    steps += d.steps.size();
  }
  o.detail << terms.size() << " terms, " << steps << " steps; ";
}

void oracle_agreement(Outcome& o) {
  Context ctx = chain_ctx();
  auto terms = enumerate_terms(ctx, 6);
  std::size_t pairs = 0, equal = 0;
  for (const auto& s : terms) {
    for (const auto& t : terms) {
      ++pairs;
      auto res = decide_rw_equal(s, t, RuleSet::paper7(), ctx, 20);
      bool eq = res.verdict == Verdict::Equal;
      o.expect(eq == oracle_equal(s, t, ctx), to_string(s) + " vs " + to_string(t));
      if (eq) {
        ++equal;
        o.expect(res.witness && res.witness->start == s && res.witness->end() == t &&
                     replay_derivation(*res.witness, RuleSet::paper7(), ctx),
                 "witness " + to_string(s) + " vs " + to_string(t));
      }
    }
  }
  o.detail << pairs << " pairs, " << equal << " equal; ";
}

void equivalence(Outcome& o) {
  Context ctx = chain_ctx();
  auto terms = enumerate_terms(ctx, 8);
  std::mt19937_64 rng(7);
  const RuleSet& gc = RuleSet::groupoid_complete();
  std::size_t nonempty = 0;
  for (int i = 0; i < 1000; ++i) {
    const PathTerm& a = terms[rng() % terms.size()];
    const PathTerm& b = terms[rng() % terms.size()];
    Derivation d = normalize(a, gc, ctx).second;
    if (endpoints(a, ctx) == endpoints(b, ctx)) {
      d = concat_derivations(d, decide_rw_equal(d.end(), b, gc, ctx, 20).witness.value());
    }
    nonempty += !d.empty();
    Derivation inv = invert_derivation(d);
    o.expect(replay_derivation(d, gc, ctx), "derivation");
    o.expect(replay_derivation(inv, gc, ctx), "inverse");
    o.expect(replay_derivation(concat_derivations(d, inv), gc, ctx), "concat");
    o.expect(invert_derivation(inv).steps == d.steps, "double inverse");
  }
  o.detail << "1000 derivations, " << nonempty << " non-empty; ";
}

void laws_level1(Outcome& o) {
  SuiteReport rep = run_laws(chain_ctx(), 1, 500, 42);
  o.expect(rep.reports.size() == 2500, "report count");
  o.expect(rep.passed() == 2500 && rep.failed() == 0, "all verified");
  std::size_t plain = 0;
  for (const auto& r : rep.reports) {
    if (r.law != Law::Assoc) continue;
    bool free = true;
    for (const auto& f : r.sample) free = free && !has_trans(f);
    if (!free) continue;
    ++plain;
    o.expect(r.witness.steps.size() == 1 && r.witness.steps[0].rule == "tt" && r.witness.steps[0].position.empty(),
             "assoc " + to_string(r.lhs));
  }
  o.detail << rep.passed() << " verified, " << rep.failed() << " failed, " << plain
           << " composition-free assoc; ";
}

void laws_tower(Outcome& o) {
  for (std::size_t level : {2u, 3u}) {
    SuiteReport rep = run_laws(chain_ctx(), level, 100, 42 + level);
    o.expect(rep.reports.size() == 500 && rep.failed() == 0, "level " + std::to_string(level));
    for (const auto& r : rep.reports) {
      o.expect(r.lhs.level() == level, "sample level");
      for (const auto& s : r.witness.steps) o.expect(parse_rule_name(s.rule).second == level, s.rule);
    }
    o.detail << "level " << level << ": " << rep.passed() << "/" << rep.reports.size() << "; ";
  }
}

void confluence(Outcome& o) {
  Context fork = fork_ctx();
  Context chain = chain_ctx();
  auto peaks = check_confluence(RuleSet::paper7(), fork, 7);
  bool literal = false;
  for (const auto& p : peaks) literal = literal || p.term == T(T(A("r"), S(A("r"))), A("s"));
  o.expect(!peaks.empty() && literal, "paper7 peak at tau(tau(r, sigma(r)), s)");
  auto chain_peaks = check_confluence(RuleSet::paper7(), chain, 7);
  o.expect(!chain_peaks.empty(), "paper7 peaks on the chain context");
  o.expect(check_confluence(RuleSet::groupoid_complete(), fork, 7).empty(), "groupoid-complete fork");
  o.expect(check_confluence(RuleSet::groupoid_complete(), chain, 7).empty(), "groupoid-complete chain");
  o.detail << peaks.size() << " + " << chain_peaks.size() << " paper7 peaks; ";

  const RuleSet& gc = RuleSet::groupoid_complete();
  std::size_t witnessed = 0;
  for (const auto& rule : gc.schemas()) {
    if (!rule.extension) continue;
    for (const auto& t : enumerate_terms(fork, 7)) {
      if (t.level() != rule.level) continue;
      auto rhs = apply_at_root(rule, t, fork);
      if (!rhs) continue;
      auto res = decide_rw_equal(t, *rhs, RuleSet::paper7(), fork, 20);
      o.expect(res.verdict == Verdict::Equal && replay_derivation(*res.witness, RuleSet::paper7(), fork),
               rule.name() + " on " + to_string(t));
      ++witnessed;
    }
  }
  o.expect(witnessed > 0, "extension instances");
  o.detail << witnessed << " extension instances witnessed; ";
}

void lambda_axioms(Outcome& o) {
  auto v = LambdaTerm::var;
  auto lam = LambdaTerm::abs;
  auto ap = LambdaTerm::app;
  struct Case {
    AxiomTag tag;
    LambdaTerm src, dst;
    bool accept;
  };
  std::vector<Case> cases = {
      {AxiomTag::Beta, ap(lam("x", ap(v("f"), v("x"))), v("a")), ap(v("f"), v("a")), true},
      {AxiomTag::Beta, ap(lam("x", ap(v("f"), v("x"))), v("a")), ap(v("f"), v("x")), false},
      {AxiomTag::Beta, ap(lam("x", lam("y", v("x"))), v("y")), lam("z", v("y")), true},
      {AxiomTag::Beta, ap(lam("x", lam("y", v("x"))), v("y")), lam("y", v("y")), false},
      {AxiomTag::Eta, lam("x", ap(v("f"), v("x"))), v("f"), true},
      {AxiomTag::Eta, lam("x", ap(ap(v("f"), v("x")), v("x"))), ap(v("f"), v("x")), false},
      {AxiomTag::Eta, lam("x", ap(v("f"), v("y"))), v("f"), false},
      {AxiomTag::Alpha, lam("x", v("x")), lam("y", v("y")), true},
      {AxiomTag::Alpha, lam("x", v("y")), lam("y", v("y")), false},
  };
  for (const auto& c : cases) {
    o.expect(is_axiom_instance(c.tag, c.src, c.dst) == c.accept,
             std::string(to_string(c.tag)) + " " + c.src.to_string() + " = " + c.dst.to_string());
  }
  o.detail << cases.size() << " goldens; ";
}

void round_trip(Outcome& o) {
  Script sc = parse_script("type A\nelem a b c : A\nstep r : a = b\nstep s : b = c\n");
  auto terms = enumerate_terms(sc.context, 6);
  for (const auto& t : terms) o.expect(parse_path(to_string(t), sc.context) == t, to_string(t));

  std::size_t docs = 0;
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const PathTerm& t = terms[rng() % terms.size()];
    auto [nf, d] = normalize(t, RuleSet::paper7(), sc.context);
    ReplayOutcome out = replay_document(derivation_document(d, sc.context, "paper7"));
    o.expect(out.ok && out.derivation && out.derivation->steps == d.steps, "document for " + to_string(t));
    ++docs;
  }
  o.detail << terms.size() << " terms, " << docs << " documents; ";
}

}  // namespace

int main() {
  run(1, "rule-table fidelity", rule_table);
  run(2, "termination", termination);
  run(3, "oracle agreement", oracle_agreement);
  run(4, "equivalence-relation witnesses", equivalence);
  run(5, "weak groupoid laws", laws_level1);
  run(6, "tower laws", laws_tower);
  run(7, "non-confluence and joinability", confluence);
  run(8, "lambda axiom validation", lambda_axioms);
  run(9, "round trip", round_trip);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
