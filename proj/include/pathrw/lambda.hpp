#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace pathrw {

class Context;
struct AtomDecl;

// Untyped λ-terms over named variables. Values are immutable and share
// structure; copying a LambdaTerm copies a handle.
class LambdaTerm {
 public:
  enum class Kind { Var, Abs, App };

  static LambdaTerm var(std::string name);
  static LambdaTerm abs(std::string bound, LambdaTerm body);
  static LambdaTerm app(LambdaTerm function, LambdaTerm argument);

  Kind kind() const;
  // Variable name for Var, bound variable for Abs.
  const std::string& name() const;
  const LambdaTerm& body() const;
  const LambdaTerm& function() const;
  const LambdaTerm& argument() const;

  std::size_t depth() const;
  // Structural hash: distinguishes bound-variable names.
  std::size_t hash() const;
  // Hash invariant under renaming of bound variables.
  std::size_t alpha_hash() const;

  std::string to_string() const;

  // Exact structural equality. Use alpha_eq for equality up to renaming.
  friend bool operator==(const LambdaTerm& a, const LambdaTerm& b);

 private:
  struct Node;
  explicit LambdaTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_vars(const LambdaTerm& m);
bool occurs_free(std::string_view x, const LambdaTerm& m);

// Appends primes to `base` until the result is not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Capture-avoiding M[N/x].
LambdaTerm substitute(const LambdaTerm& m, const std::string& x, const LambdaTerm& n);

bool alpha_eq(const LambdaTerm& m, const LambdaTerm& n);

// Nameless rendering; two terms are alpha-equal iff their canonical
// strings coincide.
std::string canonical_string(const LambdaTerm& m);

enum class AxiomTag { Declared, Beta, Eta, Alpha };

std::string_view to_string(AxiomTag tag);
AxiomTag axiom_tag_from_string(std::string_view s);

// Shape check of a tagged equation `source = target` against the λβη
// axiom schemas. Declared is accepted unconditionally.
//   beta:  (λx.M)N = M[N/x]
//   eta:   λx.(M x) = M      with x not free in M
//   alpha: source and target equal up to bound renaming
bool is_axiom_instance(AxiomTag tag, const LambdaTerm& source, const LambdaTerm& target);

// Checks a declared atom whose endpoints resolve to λ-terms in `ctx`.
// Throws PathError(NotAnAxiomInstance) when the tag's shape is not met.
void validate_axiom_atom(const AtomDecl& atom, const Context& ctx);

}  // namespace pathrw
