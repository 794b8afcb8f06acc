#pragma once

#include "ranklab/special/functions.hpp"

namespace ranklab::special {

inline constexpr double kSingularityGuard = 1e-3;

/// A_3(u, -tau; tau) summed directly.
Complex appell_A3_direct(const Real& u, const Complex& tau, const PrecisionSpec& prec);

/// Working digits for the transformed route at (u, eps): the pieces reach
/// e^{(6 pi^2 u^2 + 2 pi^2 u)/eps} before cancelling.
unsigned a3_transformed_digits(double u, double eps, unsigned base_digits);

struct A3Pieces {
  bool fallback = false;  // |u - 1/3| inside the singularity guard: only `direct` is set
  unsigned digits = 0;    // working digits actually used
  Complex s1;             // theta*mu sum over k = 0,1,2
  Complex s1_collapsed;   // the same sum reduced to n = 0 mod 3
  Complex s2;             // theta*h sum with the inverted h
  Complex s21, s22;       // shifted split of s2 (u > 1/6 only)
  Real s21_bound;         // sum_k |prefactor||theta| h_bound, u > 1/6 only
  Complex direct;         // direct series
  Complex total() const { return fallback ? direct : s1 + s2; }
};

/// A_3(u,-tau;tau) = S1 + S2 at tau = i eps/2pi, 0 < u <= 1/2.
A3Pieces appell_A3_S1S2(double u, double eps, const PrecisionSpec& prec, const QuadratureSpec& quad = {});

/// sum_{k=0}^{2} e^{2 pi i n k/3}
Complex cube_root_sum(int n, const PrecisionSpec& prec);

/// (e^{-3 pi i z} - e^{-pi i z}) A_3(z, -tau; tau) / phi(tau) for real z in (0, 1/2].
Complex rank_to_appell(const Real& z, const Complex& tau, const PrecisionSpec& prec);

struct TruncatedValue {
  Complex value;
  double log10_truncation_bound = 0;  // |exact - value| <= 10^this
};

/// sum_{n<=N} (sum_m N(m,n) zeta_t^{jm}) q^n with the omitted tail bounded by
/// sum_{n>N} p(n)|q|^n, using p(n) < e^{pi sqrt(2n/3)}.
TruncatedValue rank_series_at_root(int j, int t, const Complex& tau, int order, const PrecisionSpec& prec);

}  // namespace ranklab::special
