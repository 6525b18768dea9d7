#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pathrw/error.hpp"
#include "pathrw/lambda.hpp"

namespace pathrw {

class Object;
struct RewriteStep;

enum class PathKind { Atom, Refl, Sym, Trans, Xi, Mu, Nu, Step };

std::string_view to_string(PathKind kind);

// A path term of some level n >= 1. Level 1 terms are rewrite reasons
// between elements; a level n+1 term rewrites level n terms. Leveling is
// enforced by the factories, so every PathTerm value is well-leveled;
// endpoint chaining is checked separately (endpoints/validate).
class PathTerm {
 public:
  static PathTerm atom(std::string name);
  static PathTerm refl(Object object);
  static PathTerm sym(PathTerm sub);
  static PathTerm trans(PathTerm left, PathTerm right);
  static PathTerm xi(std::string bound, PathTerm sub);
  static PathTerm mu(LambdaTerm applied, PathTerm sub);
  static PathTerm nu(PathTerm sub, LambdaTerm applied);
  // The step must be a forward step; the atom lives one level above it.
  static PathTerm step(RewriteStep step);

  PathKind kind() const;
  std::size_t level() const;

  // Atom name or Xi bound variable.
  const std::string& name() const;
  const Object& object() const;
  const LambdaTerm& applied() const;
  const RewriteStep& step() const;

  std::size_t arity() const;
  const PathTerm& child(std::size_t i) const;
  const PathTerm& left() const { return child(0); }
  const PathTerm& right() const { return child(1); }
  const PathTerm& sub() const { return child(0); }

  // Node count.
  std::size_t size() const;
  std::size_t hash() const;

  bool is(PathKind k) const { return kind() == k; }

  friend bool operator==(const PathTerm& a, const PathTerm& b);

 private:
  struct Node;
  explicit PathTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Endpoint of a path. Level 0 objects are elements, represented as
// λ-terms (a declared element `a` is the free variable a); level k >= 1
// objects are level k path terms.
class Object {
 public:
  explicit Object(LambdaTerm element) : payload_(std::move(element)) {}
  explicit Object(PathTerm path) : payload_(std::move(path)) {}
  static Object element(std::string name) { return Object(LambdaTerm::var(std::move(name))); }

  std::size_t level() const;
  bool is_element() const { return std::holds_alternative<LambdaTerm>(payload_); }
  const LambdaTerm& element() const { return std::get<LambdaTerm>(payload_); }
  const PathTerm& path() const { return std::get<PathTerm>(payload_); }

  // Invariant under bound-variable renaming at level 0.
  std::size_t hash() const;
  std::string to_string() const;

  // Level 0 compares up to α; higher levels compare structurally.
  friend bool operator==(const Object& a, const Object& b);

 private:
  std::variant<LambdaTerm, PathTerm> payload_;
};

enum class Direction { Forward, Reverse };

std::string_view to_string(Direction d);

// One rw_n contraction. A reverse step records a contraction read
// backwards: `after` contracts to `before` by `rule` at `position`.
struct RewriteStep {
  std::string rule;
  Position position;
  Direction direction = Direction::Forward;
  PathTerm before;
  PathTerm after;
  std::size_t level = 1;

  RewriteStep flipped() const;

  friend bool operator==(const RewriteStep& a, const RewriteStep& b);
};

using Endpoints = std::pair<Object, Object>;

std::size_t size(const PathTerm& t);

const PathTerm& subterm_at(const PathTerm& t, const Position& pos);
PathTerm replace_at(const PathTerm& t, const Position& pos, PathTerm replacement);
// Rebuilds a node of the same kind as `t` with new children.
PathTerm with_children(const PathTerm& t, std::vector<PathTerm> children);

// Renders in the script expression syntax: tau(p, q), sigma(p), rho(a),
// xi(x, p), mu(m, p), nu(p, m), step(rule, [pos], before, after).
std::string to_string(const PathTerm& t);
std::string to_string(const RewriteStep& s);

}  // namespace pathrw

template <>
struct std::hash<pathrw::PathTerm> {
  std::size_t operator()(const pathrw::PathTerm& t) const noexcept { return t.hash(); }
};
