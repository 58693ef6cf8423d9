#pragma once

#include <stdexcept>
#include <string>

namespace cavityqed {

// Every error class maps to a distinct CLI exit code (see tools/cavityqed.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (e.g. Y0 at x <= 0).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid user input: malformed JSON, unknown units, violated invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Wavenumber inside the guard band of a cavity mode threshold.
class ThresholdError : public Error {
 public:
  ThresholdError(const std::string& what, double k, double threshold)
      : Error(what), k_(k), threshold_(threshold) {}
  double k() const { return k_; }
  double threshold() const { return threshold_; }

 private:
  double k_;
  double threshold_;
};

// Quadrature or series did not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double estimate = 0.0, double error = 0.0)
      : Error(what), estimate_(estimate), error_(error) {}
  double estimate() const { return estimate_; }
  double error() const { return error_; }

 private:
  double estimate_;
  double error_;
};

// Vanishing transition frequency or detuning in a denominator.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Analytic and finite-difference k-derivatives disagree.
class DerivativeMismatchError : public Error {
 public:
  DerivativeMismatchError(const std::string& what, double discrepancy)
      : Error(what), discrepancy_(discrepancy) {}
  double discrepancy() const { return discrepancy_; }

 private:
  double discrepancy_;
};

}  // namespace cavityqed
