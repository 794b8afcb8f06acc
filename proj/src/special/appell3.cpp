#include "ranklab/special/appell3.hpp"

#include <cmath>
#include <string>

#include "ranklab/errors.hpp"
#include "ranklab/rank/rank_table.hpp"
#include "ranklab/series/zqseries.hpp"

namespace ranklab::special {

namespace {

constexpr double kPiD = 3.14159265358979323846;

Complex i_pi() { return Complex(Real(0), numeric::pi()); }

double log_mod(const Complex& z) { return numeric::log_abs(numeric::abs(z)); }

PrecisionSpec scaled(const PrecisionSpec& base, unsigned digits, double log_tail, double log_quad) {
  PrecisionSpec p = base;
  p.digits = digits;
  p.series_tail_tol = std::exp(log_tail);
  p.quad_tol = std::exp(log_quad);
  if (!(p.series_tail_tol > 0) || !(p.quad_tol > 0)) {
    throw PrecisionError("appell_A3_S1S2: tolerance underflows; eps too small", digits);
  }
  return p;
}

}  // namespace

Complex appell_A3_direct(const Real& u, const Complex& tau, const PrecisionSpec& prec) {
  numeric::ScopedPrecision guard(prec.digits);
  return appell_A(3, Complex(u), -tau, tau, prec);
}

unsigned a3_transformed_digits(double u, double eps, unsigned base_digits) {
  const double growth = (6 * kPiD * kPiD * u * u + 2 * kPiD * kPiD * u) / eps;
  return base_digits + static_cast<unsigned>(std::ceil(growth / std::log(10.0))) + 10;
}

A3Pieces appell_A3_S1S2(double u_in, double eps, const PrecisionSpec& prec, const QuadratureSpec& quad) {
  if (!(u_in > 0 && u_in <= 0.5)) throw DomainError("appell_A3_S1S2: need 0 < u <= 1/2");
  if (!(eps > 0)) throw DomainError("appell_A3_S1S2: need eps > 0");
  prec.validate();

  A3Pieces out;
  const bool near_pole = std::fabs(u_in - 1.0 / 3) < kSingularityGuard * (1 - 1e-9);
  out.digits = near_pole ? prec.digits : std::max(prec.digits, a3_transformed_digits(u_in, eps, prec.digits));
  numeric::ScopedPrecision guard(out.digits);

  const Real u(u_in);
  const Complex tau = HalfPlanePoint::from_eps(eps).tau();
  PrecisionSpec direct_prec = prec;
  direct_prec.digits = out.digits;
  out.direct = appell_A3_direct(u, tau, direct_prec);
  if (near_pole) {
    out.fallback = true;
    return out;
  }

  const Real third = Real(1) / 3;
  const Complex big_t = Complex(Real(-1)) / (Real(3) * tau);  // -1/(3 tau)
  const Complex cu(u);
  const Complex u_over_tau = cu / tau;
  const double log_tail = std::log(prec.series_tail_tol);
  const double log_quad = std::log(prec.quad_tol);

  // S1 = 1/(3tau) e^{pi i u (3u + 2tau)/tau} sum_k A_1(u/tau, (k-1)/3; -1/(3tau))
  const Complex pref1 = numeric::exp(i_pi() * cu * (Real(3) * cu + Real(2) * tau) / tau) / (Real(3) * tau);
  const PrecisionSpec p1 = scaled(prec, out.digits, log_tail - log_mod(pref1) - std::log(3.0), log_quad);
  for (int k = 0; k < 3; ++k) out.s1 += appell_A(1, u_over_tau, Complex(Real(k - 1) * third), big_t, p1);
  out.s1 = pref1 * out.s1;

  // only n = 0 mod 3 survives the sum over k
  const Complex pref_c = numeric::e2pi(Complex((Real(3) * u * u + u) / 2) / tau) * numeric::e2pi(cu) / tau;
  const Complex inv_tau = Complex(Real(1)) / tau;
  out.s1_collapsed =
      pref_c * appell_kernel(3, u_over_tau, inv_tau, -inv_tau, log_tail - log_mod(pref_c), scaled(prec, out.digits, log_tail, log_quad));

  // S2 = i/(6tau) sum_k e^{pi i (2u + 3u^2/tau)} theta((k-1)/3; -1/(3tau)) h(u/tau + (1-k)/3; -1/(3tau))
  const Complex e_u = numeric::exp(i_pi() * (Real(2) * cu + Real(3) * cu * cu / tau));
  const Complex pref2 = Complex(Real(0), Real(1)) / (Real(6) * tau) * e_u;
  const bool split = u_in > 1.0 / 6;
  out.s21_bound = 0;
  for (int k = 0; k < 3; ++k) {
    if (k == 1) continue;  // theta(0; .) = 0
    const Complex theta = jacobi_theta(Complex(Real(k - 1) * third), big_t, scaled(prec, out.digits, log_tail, log_quad));
    const double log_scale = log_mod(pref2) + log_mod(theta) + std::log(4.0);
    const PrecisionSpec ph = scaled(prec, out.digits, log_tail, log_quad - log_scale);
    const Complex alpha(Real(1 - k) * third);
    out.s2 += pref2 * theta * mordell_h(u_over_tau + alpha, big_t, ph, quad);

    if (split) {
      // h(z) = -e^{-2 pi i (u/tau + (1-k)/3) + pi i/(3tau)} h(z') + 2 e^{pi i (k-1)/3} q0^{u/2 - 1/24}
      const Complex shift_pref =
          -numeric::exp(Real(-2) * i_pi() * (u_over_tau + alpha) + i_pi() / (Real(3) * tau));
      const Complex z_shift = Complex(Real(1) - Real(3) * u) / (Real(-3) * tau) + alpha;
      const double log_scale21 = log_scale + log_mod(shift_pref);
      const PrecisionSpec p21 = scaled(prec, out.digits, log_tail, log_quad - log_scale21);
      out.s21 += pref2 * shift_pref * theta * mordell_h(z_shift, big_t, p21, quad);
      out.s21_bound += numeric::abs(pref2 * shift_pref * theta) *
                       h_bound(1, Real(1 - k) / 3, Real(1) - Real(3) * u, Complex(Real(3 * eps) / (2 * numeric::pi())));
      // i/(3tau) e^{2 pi i u} q0^{-3u^2/2 + u/2 - 1/24} theta e^{pi i (k-1)/3}
      const Real expo = -Real(3) * u * u / 2 + u / 2 - Real(1) / 24;
      const Complex q0_pow = numeric::e2pi(Complex(-expo) / tau);
      out.s22 += Complex(Real(0), Real(1)) / (Real(3) * tau) * numeric::e2pi(cu) * q0_pow * theta *
                 numeric::exp(i_pi() * Complex(Real(k - 1) / 3));
    }
  }
  return out;
}

Complex cube_root_sum(int n, const PrecisionSpec& prec) {
  numeric::ScopedPrecision guard(prec.digits);
  Complex s;
  for (int k = 0; k < 3; ++k) s += numeric::e2pi(Complex(Real(n * k) / 3));
  return s;
}

Complex rank_to_appell(const Real& z, const Complex& tau, const PrecisionSpec& prec) {
  numeric::ScopedPrecision guard(prec.digits);
  const Complex zz(z);
  const Complex pref = numeric::exp(Real(-3) * i_pi() * zz) - numeric::exp(-(i_pi() * zz));
  return pref * appell_A3_direct(z, tau, prec) / euler_phi(tau, prec);
}

TruncatedValue rank_series_at_root(int j, int t, const Complex& tau, int order, const PrecisionSpec& prec) {
  if (!(tau.im > 0)) throw DomainError("rank_series_at_root: Im(tau) must be positive");
  numeric::ScopedPrecision guard(prec.digits);
  const auto coeffs =
      series::zqs_eval_root_of_unity(rank::rank_generating_function(order), j, t, prec.digits);
  const Complex q = numeric::e2pi(tau);
  TruncatedValue out;
  Complex qn(Real(1));
  for (const auto& c : coeffs) {
    out.value += c * qn;
    qn *= q;
  }
  // g(n) = pi sqrt(2n/3) - 2 pi b n is concave; the steps after N+1 keep shrinking
  const double b = numeric::to_double(tau.im);
  const double n1 = order + 1.0;
  const double g = kPiD * std::sqrt(2 * n1 / 3) - 2 * kPiD * b * n1;
  const double step = kPiD / std::sqrt(6 * n1) - 2 * kPiD * b;
  if (step >= 0) throw UsageError("rank_series_at_root: truncation order too small for a certified tail");
  out.log10_truncation_bound = (g - std::log1p(-std::exp(step))) / std::log(10.0);
  return out;
}

}  // namespace ranklab::special
