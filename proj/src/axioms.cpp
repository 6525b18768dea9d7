#include "pathrw/context.hpp"
#include "pathrw/error.hpp"
#include "pathrw/lambda.hpp"

namespace pathrw {

void validate_axiom_atom(const AtomDecl& atom, const Context& ctx) {
  if (atom.tag == AxiomTag::Declared) return;
  LambdaTerm source = ctx.element_value(atom.source);
  LambdaTerm target = ctx.element_value(atom.target);
  if (!is_axiom_instance(atom.tag, source, target)) {
    throw PathError(ErrorKind::NotAnAxiomInstance,
                    "atom '" + atom.name + "' tagged " + std::string(to_string(atom.tag)) + " relates " +
                        source.to_string() + " and " + target.to_string() + ", which is not an instance");
  }
}

}  // namespace pathrw
