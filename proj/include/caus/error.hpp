#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace caus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix/subspace shapes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Objects from two different base models were combined.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Ambient dimension above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A morphism or effect that is not in the positivity cone it was required to lie in.
class ConeViolation : public Error {
 public:
  using Error::Error;
};

/// Input that violates a documented precondition (dependent states, wrong kind, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Largest ambient dimension any vector space may have. Reads CAUS_MAX_AMBIENT
/// (clamped to >= 1); defaults to 1024.
std::size_t ambient_cap();

/// Throws CapExceeded when `dim` is above ambient_cap().
void check_ambient(std::size_t dim);

}  // namespace caus
