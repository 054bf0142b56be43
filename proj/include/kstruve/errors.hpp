#pragma once

#include <stdexcept>
#include <string>

namespace kstruve {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An argument lies within the pole tolerance of a gamma-type singularity.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The result is not representable as a finite double. `signed_infinity()`
/// carries the direction of the overflow.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, double signed_infinity)
      : Error(what), signed_infinity_(signed_infinity) {}

  double signed_infinity() const noexcept { return signed_infinity_; }

 private:
  double signed_infinity_;
};

/// Numerical integration did not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double value, double error_estimate)
      : Error(what), value_(value), error_estimate_(error_estimate) {}

  double value() const noexcept { return value_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double value_;
  double error_estimate_;
};

}  // namespace kstruve
