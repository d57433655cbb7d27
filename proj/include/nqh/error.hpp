#pragma once

#include <stdexcept>
#include <string>

namespace nqh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: zero divisors, non-square matrices, bad files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// (M, N) or level outside the range the construction is defined for.
class UnsupportedRange : public Error {
 public:
  using Error::Error;
};

/// A parameter point violating one of the open conditions of the parameter space.
class InvalidParameters : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An identity that must hold by construction did not (a bug, not bad input).
class InternalConsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace nqh
