#pragma once

#include <stdexcept>
#include <string>

namespace ranklab {

// Bad arguments or mismatched operands (e.g. series of different truncation order).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically invalid input: negative n, non-unit constant term, t = 0, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested tolerance cannot be met at the working precision.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, unsigned required_digits)
      : std::runtime_error(what), required_digits_(required_digits) {}

  unsigned required_digits() const noexcept { return required_digits_; }

 private:
  unsigned required_digits_;
};

// Evaluation point too close to a pole of an Appell-Lerch sum.
class NearPoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The Mordell integrand tail cannot be pushed below the tolerance at the
// requested truncation.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, double required_x)
      : std::runtime_error(what), required_x_(required_x) {}

  double required_x() const noexcept { return required_x_; }

 private:
  double required_x_;
};

// An iterative scheme (quadrature refinement) ran out of levels.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ranklab
