#pragma once

#include <stdexcept>
#include <string>

namespace igpt {

// Operands of different degree were combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller-supplied argument violates the documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal consistency check failed. These indicate a bug in the
// pipeline (or a counterexample to a known result), never bad user input.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace igpt
