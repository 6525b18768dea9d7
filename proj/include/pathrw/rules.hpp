#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathrw/context.hpp"
#include "pathrw/terms.hpp"

namespace pathrw {

// How a reflexivity pattern names its object: bound by the match, or
// computed from the endpoints of a term metavariable.
enum class ObjectRef { Bound, SourceOf, TargetOf };

// Rule-side term pattern over metavariables. Repeated variables must
// match structurally equal subterms.
struct Pattern {
  enum class Kind { Var, Refl, Sym, Trans };

  Kind kind = Kind::Var;
  std::string name;  // metavariable, or the object variable of Refl
  ObjectRef ref = ObjectRef::Bound;
  std::vector<Pattern> kids;

  static Pattern var(std::string name);
  static Pattern refl(std::string name, ObjectRef ref = ObjectRef::Bound);
  static Pattern sym(Pattern p);
  static Pattern trans(Pattern l, Pattern r);

  std::size_t size() const;
  std::string to_string() const;
};

struct Bindings {
  std::map<std::string, PathTerm> terms;
  std::map<std::string, Object> objects;
};

std::optional<Bindings> match(const Pattern& p, const PathTerm& t);
// Extends `b`; used when matching several patterns against one binding set.
bool match_into(const Pattern& p, const PathTerm& t, Bindings& b);
PathTerm instantiate(const Pattern& p, const Bindings& b, const Context& ctx);

// One step of a derivation script: apply `rule` (paper7 base name) at
// `local` (relative to the redex) in `direction`, giving `result`.
struct ScriptStep {
  std::string rule;
  Position local;
  Direction direction;
  Pattern result;
};

struct RuleSchema {
  std::string base;
  std::size_t level = 1;
  Pattern lhs;
  Pattern rhs;
  // Not one of the seven table rules; derivable from them.
  bool extension = false;
  // For extensions: a chain of table-rule steps from lhs to rhs.
  std::vector<ScriptStep> derivation;

  std::string name() const;
};

std::string rule_name(std::string_view base, std::size_t level);
// "tt" -> ("tt", 1), "tt_2" -> ("tt", 2). Throws PathError(UnknownRule)
// on malformed names.
std::pair<std::string, std::size_t> parse_rule_name(std::string_view name);

RuleSchema instantiate_at_level(const RuleSchema& schema, std::size_t level);

// Contracts `t` at its root with `schema`, or nullopt when it does not match.
std::optional<PathTerm> apply_at_root(const RuleSchema& schema, const PathTerm& t, const Context& ctx);

class RuleSet {
 public:
  RuleSet(std::string name, std::vector<RuleSchema> schemas);

  // sr, ss, tr, tsr, trr, tlr, tt.
  static const RuleSet& paper7();
  // paper7 plus the derivable extensions st, ttr, ttsr.
  static const RuleSet& groupoid_complete();
  // "paper7" or "groupoid-complete".
  static const RuleSet& by_name(std::string_view name);

  const std::string& name() const { return name_; }
  std::size_t level() const { return level_; }
  const std::vector<RuleSchema>& schemas() const { return schemas_; }

  RuleSet at_level(std::size_t level) const;
  bool has_extensions() const;
  // Looks a rule up by its leveled name, instantiating on demand.
  std::optional<RuleSchema> find(std::string_view rule) const;

 private:
  std::string name_;
  std::size_t level_ = 1;
  std::vector<RuleSchema> schemas_;
};

// Base names of the seven table rules, in table order.
const std::vector<std::string>& table_rule_names();

enum class Strategy { LeftmostInnermost, LeftmostOutermost };

struct Redex {
  std::string rule;
  Position position;

  friend bool operator==(const Redex&, const Redex&) = default;
};

// All (rule, position) pairs whose left-hand side matches, in
// leftmost-innermost order (post-order; rule-set order at each node).
// Schemas are instantiated at the level of `t`.
std::vector<Redex> match_redexes(const RuleSet& rs, const PathTerm& t);
std::optional<Redex> first_redex(const RuleSet& rs, const PathTerm& t,
                                 Strategy strategy = Strategy::LeftmostInnermost);

// Rendered natural-deduction derivation for one of the table rules.
// Throws PathError(UnknownRule).
std::string explain_rule(std::string_view name);

}  // namespace pathrw
