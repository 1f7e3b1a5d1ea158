#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a byte offset into the source.
struct ParseError : Error {
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

// Input outside the affine fragment (or violating a stated precondition).
struct PreconditionError : Error {
  using Error::Error;
};

// The execution formula produced an unbounded trajectory.
struct Diverges : Error {
  using Error::Error;
};

// A computed value broke an invariant that the theory guarantees.
struct InvariantViolation : Error {
  using Error::Error;
};

}  // namespace goi
