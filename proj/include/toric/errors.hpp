#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fan violates a structural invariant (see validate()).
class InvalidFanError : public Error {
 public:
  using Error::Error;
};

/// The fan is structurally valid but not smooth or not complete.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: JSON, catalog specs, parameter ranges.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not. Always a bug or a
/// violated precondition upstream.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
