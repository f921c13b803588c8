#pragma once

#include <stdexcept>
#include <string>

namespace sqboost {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A velocity reached or exceeded the speed of light (c = 1) minus the guard band.
class SuperluminalInput : public Error {
 public:
  using Error::Error;
};

/// A 3x3 matrix failed a Lorentz-group check (metric, determinant or orthochronous).
class NotLorentz : public Error {
 public:
  using Error::Error;
};

/// A Fock-space dimension below the minimum of 2, or an invalid cutoff.
class InvalidDimension : public Error {
 public:
  using Error::Error;
};

/// The matrix-exponential Taylor series failed to reach tolerance within the term cap.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// The generator Gram matrix on the comparison subspace is too ill-conditioned to project.
class IllConditionedProjection : public Error {
 public:
  using Error::Error;
};

/// A scalar argument outside its documented domain (negative modulus, non-finite input).
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

}  // namespace sqboost
