#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pathrw/lambda.hpp"
#include "pathrw/terms.hpp"

namespace pathrw {

// A declared rewrite reason `name : source = target` in `type`.
struct AtomDecl {
  std::string name;
  std::string source;
  std::string target;
  std::string type;
  AxiomTag tag = AxiomTag::Declared;
};

// Declarations the path layer is typed against. Type, element and atom
// names share one namespace. Elements declared with a λ-term value
// (`lam`) resolve to that value when used as endpoints.
class Context {
 public:
  void add_type(const std::string& name);
  void add_element(const std::string& name, const std::string& type);
  // `type` may be empty: λ-terms themselves are untyped.
  void add_lambda(const std::string& name, const LambdaTerm& value, const std::string& type = "");
  // Checks the endpoints exist and share a type, then validates the
  // axiom shape for tagged atoms.
  void add_atom(const AtomDecl& atom);

  bool has_type(const std::string& name) const { return types_.count(name) != 0; }
  bool has_element(const std::string& name) const { return elements_.count(name) != 0; }
  bool has_atom(const std::string& name) const { return atom_index_.count(name) != 0; }
  bool has_name(const std::string& name) const;

  const std::set<std::string>& types() const { return types_; }
  // Declaration order.
  const std::vector<std::string>& element_names() const { return element_order_; }
  const std::string& element_type(const std::string& name) const;
  const std::map<std::string, LambdaTerm>& lambda_elements() const { return lambdas_; }
  const std::vector<AtomDecl>& atoms() const { return atoms_; }
  const AtomDecl& atom(const std::string& name) const;

  // λ-value of an element: its `lam` definition or the free variable.
  LambdaTerm element_value(const std::string& name) const;
  // Replaces free occurrences of λ-defined elements by their values.
  LambdaTerm resolve(const LambdaTerm& m) const;
  Object resolve(const Object& o) const;

 private:
  std::set<std::string> types_;
  std::map<std::string, std::string> elements_;
  std::vector<std::string> element_order_;
  std::map<std::string, LambdaTerm> lambdas_;
  std::vector<AtomDecl> atoms_;
  std::map<std::string, std::size_t> atom_index_;
};

// Source and target of a path term. Throws PathError(UnknownAtom) or
// PathError(EndpointMismatch) with the failing node's position.
Endpoints endpoints(const PathTerm& t, const Context& ctx);

enum class ViolationKind { UnknownAtom, EndpointMismatch, InvalidStep };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Position position;
  std::string message;
};

struct WellFormednessReport {
  std::vector<Violation> violations;
  std::optional<Endpoints> endpoints;

  bool ok() const { return violations.empty(); }
};

// Reports every violation with its position. Step atoms are replayed
// against the full rule catalog.
WellFormednessReport validate(const PathTerm& t, const Context& ctx);

}  // namespace pathrw
