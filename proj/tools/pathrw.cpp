#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pathrw/engine.hpp"
#include "pathrw/groupoid.hpp"
#include "pathrw/oracle.hpp"
#include "pathrw/rules.hpp"
#include "pathrw/script.hpp"
#include "pathrw/serialize.hpp"

namespace {

using namespace pathrw;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

// Thrown for unusable input; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot read '" + file + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Script load(const std::string& file) {
  std::string text = slurp(file);
  try {
    return parse_script(text);
  } catch (const ScriptError& e) {
    throw InputError(file + ":" + e.what());
  }
}

// A path name from the script, or an expression over its declarations.
PathTerm term(const Script& script, const std::string& arg) {
  for (const auto& [n, t] : script.paths) {
    if (n == arg) return t;
  }
  try {
    return parse_path(arg, script.context, script.path_map());
  } catch (const ScriptError& e) {
    throw InputError("'" + arg + "': " + e.what());
  }
}

const RuleSet& rules(const std::string& name) {
  try {
    return RuleSet::by_name(name);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void print_steps(const Derivation& d) {
  std::size_t i = 0;
  for (const auto& s : d.steps) {
    std::cout << "  " << ++i << ". " << s.rule << " at " << position_to_string(s.position)
              << (s.direction == Direction::Forward ? "  " : " (reversed)  ") << to_string(s.before) << "  =>  "
              << to_string(s.after) << "\n";
  }
}

struct Options {
  std::string file, p, q, rule_set = "paper7", strategy = "innermost", rule, doc;
  std::size_t level = 0, bound = 20, samples = 100, max_size = 7;
  std::uint64_t seed = 0;
  bool json = false, search_only = false, verbose = false;
};

int cmd_normalize(const Options& o) {
  Script script = load(o.file);
  PathTerm t = term(script, o.p);
  if (o.level != 0 && t.level() != o.level) {
    throw InputError("'" + o.p + "' has level " + std::to_string(t.level()) + ", not " + std::to_string(o.level));
  }
  Strategy st = o.strategy == "outermost" ? Strategy::LeftmostOutermost : Strategy::LeftmostInnermost;
  auto [nf, d] = normalize(t, rules(o.rule_set), script.context, st);
  if (o.json) {
    std::cout << derivation_document(d, script.context, o.rule_set) << "\n";
    return kOk;
  }
  std::cout << "normal form: " << to_string(nf) << "\n";
  std::cout << d.steps.size() << (d.steps.size() == 1 ? " step" : " steps") << "\n";
  print_steps(d);
  return kOk;
}

int cmd_equal(const Options& o) {
  Script script = load(o.file);
  PathTerm s = term(script, o.p);
  PathTerm t = term(script, o.q);
  if (s.level() != t.level()) throw InputError("the two terms have different levels");
  DecideOptions opts;
  opts.use_oracle = !o.search_only;
  auto res = decide_rw_equal(s, t, rules(o.rule_set), script.context, o.bound, opts);
  if (o.json && res.witness) {
    std::cout << derivation_document(*res.witness, script.context, o.rule_set) << "\n";
  } else {
    std::cout << to_string(res.verdict) << ": " << res.reason << "\n";
    if (res.witness) {
      std::cout << res.witness->steps.size() << (res.witness->steps.size() == 1 ? " step" : " steps") << "\n";
      print_steps(*res.witness);
    }
  }
  return res.verdict == Verdict::Equal ? kOk : kFailed;
}

int cmd_laws(const Options& o) {
  Script script = load(o.file);
  std::uint64_t seed = o.seed;
  if (const char* env = std::getenv("PATHRW_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InputError("PATHRW_SEED must be a non-negative integer");
    }
  }
  if (o.level == 0) throw InputError("--level must be at least 1");
  if (script.context.atoms().empty()) throw InputError("law sampling needs at least one step declaration");
  SuiteReport rep = run_laws(script.context, o.level, o.samples, seed);
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_law;
  for (const auto& r : rep.reports) {
    auto& [ok, all] = per_law[std::string(to_string(r.law))];
    ok += r.verified ? 1 : 0;
    ++all;
  }
  std::cout << "level " << rep.level << ", " << rep.samples << " samples, seed " << rep.seed << "\n";
  for (const auto& [law, c] : per_law) std::cout << "  " << law << ": " << c.first << "/" << c.second << " verified\n";
  for (const auto& r : rep.reports) {
    if (r.verified && !o.verbose) continue;
    std::cout << (r.verified ? "  ok     " : "  FAILED ") << to_string(r.law) << "  " << to_string(r.lhs)
              << "  =  " << to_string(r.rhs) << "  (" << r.witness.steps.size() << " steps)\n";
  }
  std::cout << rep.passed() << " verified, " << rep.failed() << " failed\n";
  return rep.failed() == 0 ? kOk : kFailed;
}

int cmd_confluence(const Options& o) {
  Script script = load(o.file);
  auto peaks = check_confluence(rules(o.rule_set), script.context, o.max_size);
  for (const auto& p : peaks) {
    std::cout << to_string(p.term) << "\n    " << p.left.rule << " at " << position_to_string(p.left.position)
              << "  ->*  " << to_string(p.left_normal) << "\n    " << p.right.rule << " at "
              << position_to_string(p.right.position) << "  ->*  " << to_string(p.right_normal) << "\n";
  }
  std::cout << peaks.size() << (peaks.size() == 1 ? " peak" : " peaks") << " with distinct normal forms under "
            << o.rule_set << " up to size " << o.max_size << "\n";
  return kOk;
}

int cmd_explain(const Options& o) {
  try {
    std::cout << explain_rule(o.rule);
  } catch (const PathError& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int cmd_oracle(const Options& o) {
  Script script = load(o.file);
  PathTerm t = term(script, o.p);
  ReducedWord w = word(t, script.context);
  std::cout << "word: " << w.to_string() << "\n";
  std::cout << "reads back as: " << to_string(word_to_term(w)) << "\n";
  return kOk;
}

int cmd_replay(const Options& o) {
  ReplayOutcome out = replay_document(slurp(o.doc));
  std::cout << (out.ok ? "ok: " : "rejected: ") << out.message << "\n";
  if (out.ok) return kOk;
  return out.derivation ? kFailed : kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting and equality checking for computational path terms"};
  app.require_subcommand(1);
  Options o;
  auto rules_opt = [&](CLI::App* c) {
    c->add_option("--rules", o.rule_set, "paper7 or groupoid-complete")
        ->check(CLI::IsMember({"paper7", "groupoid-complete"}));
  };

  auto* norm = app.add_subcommand("normalize", "Normal form and contraction trace");
  norm->add_option("file", o.file)->required();
  norm->add_option("path", o.p, "path name or expression")->required();
  rules_opt(norm);
  norm->add_option("--level", o.level, "expected level of the term");
  norm->add_option("--strategy", o.strategy)->check(CLI::IsMember({"innermost", "outermost"}));
  norm->add_flag("--json", o.json, "print the derivation document");

  auto* eq = app.add_subcommand("equal", "Decide rw-equality and print a witness");
  eq->add_option("file", o.file)->required();
  eq->add_option("p", o.p)->required();
  eq->add_option("q", o.q)->required();
  rules_opt(eq);
  eq->add_option("--bound", o.bound, "maximum witness length for the search");
  eq->add_flag("--search-only", o.search_only, "skip the word oracle; Unknown becomes possible");
  eq->add_flag("--json", o.json, "print the witness as a derivation document");

  auto* laws = app.add_subcommand("laws", "Randomized weak groupoid law suite");
  laws->add_option("file", o.file)->required();
  laws->add_option("--level", o.level)->required();
  laws->add_option("--samples", o.samples);
  laws->add_option("--seed", o.seed, "overridden by PATHRW_SEED");
  laws->add_flag("--verbose", o.verbose, "list every law check");

  auto* conf = app.add_subcommand("confluence", "Peaks whose contracta normalize differently");
  conf->add_option("file", o.file)->required();
  rules_opt(conf);
  conf->add_option("--max-size", o.max_size);

  auto* expl = app.add_subcommand("explain", "Natural deduction derivation of a rule");
  expl->add_option("rule", o.rule)->required();

  auto* orc = app.add_subcommand("oracle", "Reduced word of a path");
  orc->add_option("file", o.file)->required();
  orc->add_option("path", o.p)->required();

  auto* rep = app.add_subcommand("replay", "Check a derivation document on its own");
  rep->add_option("document", o.doc)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*norm) return cmd_normalize(o);
    if (*eq) return cmd_equal(o);
    if (*laws) return cmd_laws(o);
    if (*conf) return cmd_confluence(o);
    if (*expl) return cmd_explain(o);
    if (*orc) return cmd_oracle(o);
    if (*rep) return cmd_replay(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kBadInput;
}
