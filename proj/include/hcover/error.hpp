#pragma once

#include <stdexcept>
#include <string>

namespace hcover {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic between elements or polynomials living in different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inputs violating its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size/precision cap was hit before the computation could conclude.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hcover
