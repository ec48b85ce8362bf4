#pragma once

#include <stdexcept>
#include <string>

namespace promisecc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes disagree (bitstring lengths, state/operator dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A family or algorithm parameter is outside its admissible range.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: bad bitstrings, non-orthonormal prescriptions,
/// automaton words of the wrong shape.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A deterministic procedure was invoked on an input outside its promise.
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

/// Exhaustive work was requested above the configured size limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// A DFA handed to the protocol reduction does not solve the promise problem.
class ReductionError : public Error {
 public:
  using Error::Error;
};

}  // namespace promisecc
