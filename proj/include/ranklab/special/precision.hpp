#pragma once

#include <optional>
#include <string>

#include "ranklab/numeric/mp.hpp"

namespace ranklab::special {

using numeric::Complex;
using numeric::Real;

struct PrecisionSpec {
  unsigned digits = 30;
  double series_tail_tol = 1e-22;
  double quad_tol = 1e-18;

  /// Tolerances derived from the digit count: tail 10^-(d-8), quadrature 10^-(d-12).
  static PrecisionSpec for_digits(unsigned digits);
  /// 30 digits for eps >= 0.5, 60 below.
  static PrecisionSpec for_eps(double eps);

  /// Throws UsageError for digits < 16 or non-positive tolerances, and
  /// PrecisionError when a tolerance is finer than the digits can resolve.
  void validate() const;
};

struct QuadratureSpec {
  double truncation = 0;  // X; 0 picks the smallest X whose tail bound meets quad_tol
  int max_level = 14;     // tanh-sinh step 2^-level at the finest level
  std::string scheme = "tanh-sinh";
};

/// (u, v, tau) with Im tau > 0. u and v are kept as given.
class HalfPlanePoint {
 public:
  HalfPlanePoint(Complex u, Complex v, Complex tau);
  /// tau = i eps / 2pi.
  static HalfPlanePoint from_eps(double eps, Complex u = Complex(), Complex v = Complex());

  const Complex& u() const noexcept { return u_; }
  const Complex& v() const noexcept { return v_; }
  /// Recomputed at the working precision when built from eps.
  Complex tau() const;
  std::optional<double> eps() const noexcept { return eps_; }

  /// e^{2 pi i tau}
  Complex q() const;
  /// e^{-2 pi i / tau}
  Complex q0() const;

 private:
  Complex u_, v_, tau_;
  std::optional<double> eps_;
};

}  // namespace ranklab::special
