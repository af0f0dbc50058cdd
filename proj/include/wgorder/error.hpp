#pragma once

#include <stdexcept>
#include <string>

namespace wgorder {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distribution or generator parameter lies outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the function (u outside [0, 1), x < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lengths of vectors or grids do not fit the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// The baseline cdf reached 1 - 1e-12 at the scaled argument, so the odds
/// w = F / (1 - F) can no longer be evaluated meaningfully.
class SaturationError : public Error {
 public:
  explicit SaturationError(double x)
      : Error("odds saturated at x = " + std::to_string(x)), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Operation not defined for the regime of the system (e.g. hazard under a copula).
class UnsupportedRegimeError : public Error {
 public:
  using Error::Error;
};

/// Requested finite-difference order exceeds what double precision supports.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Archimedean generator evaluated outside its domain, or not usable for the request.
class GeneratorError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration: malformed config files, or two systems that cannot
/// be compared (mismatched regimes, sizes, ...).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A function returned a non-finite value where a finite one was required.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double x) : Error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Random hypothesis generation gave up after its retry budget.
class GenerationExhaustedError : public Error {
 public:
  using Error::Error;
};

/// An output file could not be written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wgorder
