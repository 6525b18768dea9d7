#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pathrw/context.hpp"
#include "pathrw/engine.hpp"

namespace pathrw {

// JSON document for a derivation: the declarations it depends on, the rule
// set, level, start and end terms and every step, with terms written in
// the script expression syntax.
std::string derivation_document(const Derivation& d, const Context& ctx, const std::string& rules);

struct ReplayOutcome {
  bool ok = false;
  std::string message;
  std::optional<Derivation> derivation;
};

// Rebuilds the context from the document alone and replays every step.
// Malformed documents yield ok = false with a message.
ReplayOutcome replay_document(std::string_view json_text);

}  // namespace pathrw
