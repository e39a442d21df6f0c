#pragma once

#include <stdexcept>
#include <string>

namespace hopflab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (bad shapes, wrong field, parse errors).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The requested computation is outside the supported envelope.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check disagreed, or a structure that must exist was not found.
class HardFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hopflab
