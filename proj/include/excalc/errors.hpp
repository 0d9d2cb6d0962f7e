#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace excalc {

/// Base class of all engine errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structural misuse: mode, dimension or base-point mismatch, invalid
/// coordinate direction, malformed construction.
struct DomainError : Error {
  using Error::Error;
};

/// A stated operator precondition does not hold for the given input.
struct PreconditionError : Error {
  using Error::Error;
};

/// Lexical or syntax error in a form expression. Position is 1-based.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error("at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

}  // namespace excalc
