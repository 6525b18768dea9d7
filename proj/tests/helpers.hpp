#pragma once

#include "pathrw/context.hpp"
#include "pathrw/terms.hpp"

namespace testing {

using namespace pathrw;

inline PathTerm A(const std::string& n) { return PathTerm::atom(n); }
inline PathTerm R(const std::string& e) { return PathTerm::refl(Object::element(e)); }
inline PathTerm S(const PathTerm& t) { return PathTerm::sym(t); }
inline PathTerm T(const PathTerm& l, const PathTerm& r) { return PathTerm::trans(l, r); }

// r : a = b, s : b = c
inline Context chain_ctx() {
  Context ctx;
  ctx.add_type("A");
  for (auto e : {"a", "b", "c"}) ctx.add_element(e, "A");
  ctx.add_atom({"r", "a", "b", "A"});
  ctx.add_atom({"s", "b", "c", "A"});
  return ctx;
}

// r : a = b, s : a = c
inline Context fork_ctx() {
  Context ctx;
  ctx.add_type("A");
  for (auto e : {"a", "b", "c"}) ctx.add_element(e, "A");
  ctx.add_atom({"r", "a", "b", "A"});
  ctx.add_atom({"s", "a", "c", "A"});
  return ctx;
}

}  // namespace testing
