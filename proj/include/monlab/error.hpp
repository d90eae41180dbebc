#pragma once

#include <stdexcept>
#include <string>

namespace monlab {

// Malformed or out-of-contract arguments. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical hypothesis of an operation does not hold for the input
// (e.g. asking for the regularity bound report of an ideal that is not N2).
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// The requested enumeration space does not fit the machine-word index.
class CapacityError : public InputError {
 public:
  using InputError::InputError;
};

// A checkpoint file exists but cannot be used to resume.
class ResumeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Always a bug. Exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A statement that is a theorem was observed to fail on a concrete input.
// Either a bug or a counterexample; either way exit code 3.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monlab
