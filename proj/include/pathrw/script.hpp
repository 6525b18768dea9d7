#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathrw/context.hpp"
#include "pathrw/terms.hpp"

namespace pathrw {

enum class ScriptErrorKind { Syntax, UndeclaredName, TypeMismatch, NotAnAxiomInstance };

std::string_view to_string(ScriptErrorKind kind);

// Lines and columns are 1-based; columns count code points.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(ScriptErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

  ScriptErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ScriptErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

struct Script {
  Context context;
  // Declaration order.
  std::vector<std::pair<std::string, PathTerm>> paths;

  // Throws std::out_of_range for unknown names.
  const PathTerm& path(const std::string& name) const;
  std::map<std::string, PathTerm> path_map() const;
};

// Line-oriented declarations:
//   type A
//   elem a b : A
//   lam m := \x. x [: A]
//   step r : a = b [beta|eta|alpha|declared]
//   path p := tau(r, sigma(r))
// Lines starting with `--` are comments. Greek letters τ σ ρ ξ μ ν υ λ are
// accepted for the ASCII keywords.
Script parse_script(std::string_view text);

// One path expression against `ctx`; `named` supplies earlier path
// definitions. The result is checked for well-formedness.
PathTerm parse_path(std::string_view text, const Context& ctx, const std::map<std::string, PathTerm>& named = {});

// A λ-expression whose free variables are declared elements of `ctx`.
LambdaTerm parse_lambda(std::string_view text, const Context& ctx);

}  // namespace pathrw
