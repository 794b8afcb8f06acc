#pragma once

#include "ranklab/special/precision.hpp"

namespace ranklab::special {

inline constexpr double kPoleGuard = 1e-6;

/// theta(z;tau) = sum_{n in 1/2+Z} e^{pi i n^2 tau + 2 pi i n (z + 1/2)}
Complex jacobi_theta(const Complex& z, const Complex& tau, const PrecisionSpec& prec);

/// sum_n (-1)^{ln} q^{l n(n+1)/2} e^{2 pi i n v} / (1 - e^{2 pi i u} q^n), without prefactor.
/// `log_tol` is the natural log of the absolute tolerance on the returned sum.
/// NearPoleError when a denominator falls below kPoleGuard.
Complex appell_kernel(int level, const Complex& u, const Complex& v, const Complex& tau, double log_tol,
                      const PrecisionSpec& prec);

/// Level-l Appell function e^{pi i l u} * appell_kernel(l, u, v, tau).
Complex appell_A(int level, const Complex& u, const Complex& v, const Complex& tau, const PrecisionSpec& prec);

/// mu(u,v;tau) = e^{pi i u} / theta(v;tau) * appell_kernel(1, u, v, tau).
Complex zwegers_mu(const Complex& u, const Complex& v, const Complex& tau, const PrecisionSpec& prec);

/// h(z;tau) = int_R e^{pi i tau x^2 - 2 pi z x} / cosh(pi x) dx by tanh-sinh on [-X, X].
Complex mordell_h(const Complex& z, const Complex& tau, const PrecisionSpec& prec,
                  const QuadratureSpec& quad = {});

/// Bound on |h(i beta/(kappa z) + alpha; i/(kappa z))|. DomainError outside
/// kappa >= 1, |alpha| < 1/2, -1/2 <= beta < 1/2, Re z > 0.
Real h_bound(int kappa, const Real& alpha, const Real& beta, const Complex& z);

/// phi(tau) = prod_{n>=1} (1 - q^n), truncated once the remaining factors
/// change the product by less than the series tolerance (relative).
Complex euler_phi(const Complex& tau, const PrecisionSpec& prec);

/// Smallest X for which the two Mordell tails are below tol.
double mordell_truncation(const Complex& z, const Complex& tau, double tol);

}  // namespace ranklab::special
