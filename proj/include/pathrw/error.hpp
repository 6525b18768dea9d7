#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathrw {

using Position = std::vector<std::size_t>;

std::string position_to_string(const Position& pos);

enum class ErrorKind {
  UnknownAtom,
  EndpointMismatch,
  LevelMismatch,
  NotAnAxiomInstance,
  NoRedex,
  ChainMismatch,
  UnknownRule,
  InvalidContext,
};

std::string to_string(ErrorKind kind);

class PathError : public std::runtime_error {
 public:
  PathError(ErrorKind kind, const std::string& message, Position position = {})
      : std::runtime_error(to_string(kind) + ": " + message),
        kind_(kind),
        position_(std::move(position)) {}

  ErrorKind kind() const { return kind_; }
  const Position& position() const { return position_; }

 private:
  ErrorKind kind_;
  Position position_;
};

}  // namespace pathrw
