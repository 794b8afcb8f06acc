#include "ranklab/special/functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ranklab/errors.hpp"

namespace ranklab::special {

using numeric::to_double;

namespace {

constexpr double kPiD = 3.14159265358979323846;
constexpr long kMaxTerms = 10000000;

// Smallest K >= start with sum_{n>K} e^{Q(n)} <= e^{log_tol} where
// Q(n) = a2 n^2 + a1 n + a0 and a2 < 0. Once the increments of Q are
// negative they keep decreasing, so the tail is dominated by a geometric series.
long quadratic_cutoff(double a2, double a1, double a0, long start, double log_tol) {
  for (long k = start; k < start + kMaxTerms; ++k) {
    const double n = static_cast<double>(k) + 1;
    const double step = a2 * (2 * n + 1) + a1;
    if (step >= 0) continue;
    const double tail = a2 * n * n + a1 * n + a0 - std::log1p(-std::exp(step));
    if (tail <= log_tol) return k;
  }
  throw UsageError("series cutoff exceeds " + std::to_string(kMaxTerms) + " terms; Im(tau) too small");
}

void check_log_digits(double log_peak, double log_tol, const char* who) {
  const double need = (log_peak - log_tol) / std::log(10.0) + 3;
  if (need > static_cast<double>(numeric::working_digits())) {
    const auto req = static_cast<unsigned>(std::ceil(need));
    throw PrecisionError(std::string(who) + ": cancellation needs about " + std::to_string(req) + " digits, have " +
                             std::to_string(numeric::working_digits()),
                         req);
  }
}

void check_digits(double log_peak, double tol, const char* who) { check_log_digits(log_peak, std::log(tol), who); }

void require_upper(const Complex& tau, const char* who) {
  if (!(tau.im > 0)) throw DomainError(std::string(who) + ": Im(tau) must be positive");
}

Complex i_pi() { return Complex(Real(0), numeric::pi()); }

// 2 e^{-pi|x|}-dominated Gaussian tail of the Mordell integrand beyond |x| = X, as a log.
double mordell_log_tail(double b, double c, double x) {
  double worst = -std::numeric_limits<double>::infinity();
  for (int sigma : {1, -1}) {
    const double slope = 2 * kPiD * b * x + 2 * kPiD * sigma * c + kPiD;
    if (slope <= 0) return std::numeric_limits<double>::infinity();
    const double g = -kPiD * b * x * x - (2 * kPiD * sigma * c + kPiD) * x + std::log(2.0);
    worst = std::max(worst, g - std::log(slope));
  }
  return worst + std::log(2.0);
}

}  // namespace

Complex jacobi_theta(const Complex& z, const Complex& tau, const PrecisionSpec& prec) {
  require_upper(tau, "jacobi_theta");
  numeric::ScopedPrecision guard(prec.digits);
  const double b = to_double(tau.im);
  const double y = to_double(z.im);
  const double log_tol = std::log(prec.series_tail_tol / 2);
  // n = m + 1/2 and n = -(m + 1/2), m >= 0
  const long k_pos = quadratic_cutoff(-kPiD * b, -kPiD * b - 2 * kPiD * y, -kPiD * b / 4 - kPiD * y, 0, log_tol);
  const long k_neg = quadratic_cutoff(-kPiD * b, -kPiD * b + 2 * kPiD * y, -kPiD * b / 4 + kPiD * y, 0, log_tol);
  const long k = std::max(k_pos, k_neg);

  const Complex shift = z + Complex(Real(1) / 2);
  Complex sum;
  double log_peak = -std::numeric_limits<double>::infinity();
  for (long m = -k - 1; m <= k; ++m) {
    const Real n = Real(m) + Real(1) / 2;
    const Complex e = i_pi() * (n * n * tau + Real(2) * n * shift);
    log_peak = std::max(log_peak, to_double(e.re));
    sum += numeric::exp(e);
  }
  check_digits(log_peak, prec.series_tail_tol, "jacobi_theta");
  return sum;
}

Complex appell_kernel(int level, const Complex& u, const Complex& v, const Complex& tau, double log_tol,
                      const PrecisionSpec& prec) {
  if (level < 1) throw DomainError("appell: level must be >= 1");
  require_upper(tau, "appell");
  numeric::ScopedPrecision guard(prec.digits);
  const double b = to_double(tau.im);
  const double l = level;
  const double log_w = -2 * kPiD * to_double(u.im);  // log |e^{2 pi i u}|
  const double im_v = to_double(v.im);
  const double ln2 = std::log(2.0);
  const double log_half_tol = log_tol - ln2;

  // n >= 0 where |w q^n| <= 1/2: |term| <= 2 |q|^{l n(n+1)/2} e^{-2 pi n Im v}
  const long start_pos = std::max(0L, static_cast<long>(std::ceil((log_w + ln2) / (2 * kPiD * b))));
  const long k_pos =
      quadratic_cutoff(-kPiD * b * l, -kPiD * b * l - 2 * kPiD * im_v, ln2, start_pos, log_half_tol);
  // n = -m where |w q^n| >= 2: |term| <= 2 |numerator| / |w q^n|
  const long start_neg = std::max(1L, static_cast<long>(std::ceil((ln2 - log_w) / (2 * kPiD * b))));
  const long k_neg = quadratic_cutoff(-kPiD * b * l, kPiD * b * l + 2 * kPiD * im_v - 2 * kPiD * b, ln2 - log_w,
                                      start_neg, log_half_tol);

  Complex sum;
  double log_peak = -std::numeric_limits<double>::infinity();
  for (long n = -k_neg; n <= k_pos; ++n) {
    const Real nn(n);
    const Complex denom = Complex(Real(1)) - numeric::e2pi(u + nn * tau);
    if (numeric::abs(denom) < kPoleGuard) {
      throw NearPoleError("appell: |1 - e^{2 pi i u} q^n| < " + std::to_string(kPoleGuard) + " at n = " +
                          std::to_string(n));
    }
    const Real tri = Real(level) * nn * (nn + 1) / 2;
    Complex num = numeric::e2pi(tri * tau + nn * v);
    if ((level * n) % 2 != 0) num = -num;
    const Complex term = num / denom;
    log_peak = std::max(log_peak, numeric::log_abs(numeric::abs(term)));
    sum += term;
  }
  check_log_digits(log_peak, log_tol, "appell");
  return sum;
}

Complex appell_A(int level, const Complex& u, const Complex& v, const Complex& tau, const PrecisionSpec& prec) {
  numeric::ScopedPrecision guard(prec.digits);
  const Complex pref = numeric::exp(Real(level) * i_pi() * u);
  const double log_scale = numeric::log_abs(numeric::abs(pref));
  return pref * appell_kernel(level, u, v, tau, std::log(prec.series_tail_tol) - log_scale, prec);
}

Complex zwegers_mu(const Complex& u, const Complex& v, const Complex& tau, const PrecisionSpec& prec) {
  numeric::ScopedPrecision guard(prec.digits);
  const Complex theta = jacobi_theta(v, tau, prec);
  const Real mod = numeric::abs(theta);
  if (mod < kPoleGuard) throw NearPoleError("zwegers_mu: theta(v;tau) vanishes to within the pole guard");
  const Complex pref = numeric::exp(i_pi() * u) / theta;
  const double log_scale = numeric::log_abs(numeric::abs(pref));
  return pref * appell_kernel(1, u, v, tau, std::log(prec.series_tail_tol) - log_scale, prec);
}

double mordell_truncation(const Complex& z, const Complex& tau, double tol) {
  const double b = to_double(tau.im);
  const double c = to_double(z.re);
  const double log_tol = std::log(tol);
  for (double x = 0.5; x < 1e6; x += 0.25) {
    if (mordell_log_tail(b, c, x) <= log_tol) return x;
  }
  throw TruncationError("mordell_h: no truncation below 1e6 meets the tail tolerance", 1e6);
}

Complex mordell_h(const Complex& z, const Complex& tau, const PrecisionSpec& prec, const QuadratureSpec& quad) {
  require_upper(tau, "mordell_h");
  if (quad.scheme != "tanh-sinh") throw UsageError("mordell_h: unknown quadrature scheme '" + quad.scheme + "'");
  numeric::ScopedPrecision guard(prec.digits);
  const double tail_tol = prec.quad_tol / 4;
  const double needed = mordell_truncation(z, tau, tail_tol);
  double x_max = needed;
  if (quad.truncation > 0) {
    if (mordell_log_tail(to_double(tau.im), to_double(z.re), quad.truncation) > std::log(tail_tol)) {
      throw TruncationError("mordell_h: truncation X = " + std::to_string(quad.truncation) +
                                " leaves a tail above quad_tol; need X >= " + std::to_string(needed),
                            needed);
    }
    x_max = quad.truncation;
  }

  const Real pi = numeric::pi();
  const Real half_pi = pi / 2;
  const Real big_x(x_max);
  const Real a = pi * tau.re, b = pi * tau.im, c = 2 * pi * z.re, d = 2 * pi * z.im;
  auto integrand = [&](const Real& x) {
    const Real re = -b * x * x - c * x;
    const Real im = a * x * x - d * x;
    const Real ax = boost::multiprecision::abs(x);
    // 1/cosh(pi x) = 2 e^{-pi|x|} / (1 + e^{-2 pi |x|})
    const Real mag = 2 * boost::multiprecision::exp(re - pi * ax) / (1 + boost::multiprecision::exp(-2 * pi * ax));
    return Complex(mag * boost::multiprecision::cos(im), mag * boost::multiprecision::sin(im));
  };

  // weights fall below 10^-(digits+5) beyond t_max
  const double log_floor = -(static_cast<double>(prec.digits) + 5) * std::log(10.0) - std::log(x_max);
  double t_max = 1;
  while (std::log(kPiD * std::cosh(t_max) * 2) - kPiD * std::sinh(t_max) > log_floor) t_max += 0.05;

  auto node_sum = [&](double h, long j0, long step, Real& l1) {
    Complex s;
    for (long j = j0; static_cast<double>(j) * h <= t_max; j += step) {
      const Real t = Real(static_cast<double>(j)) * Real(h);
      for (int sign : {1, -1}) {
        if (j == 0 && sign < 0) continue;
        const Real ts = sign * t;
        const Real sh = half_pi * boost::multiprecision::sinh(ts);
        const Real ch = boost::multiprecision::cosh(sh);
        const Real w = big_x * half_pi * boost::multiprecision::cosh(ts) / (ch * ch);
        const Complex f = integrand(big_x * boost::multiprecision::tanh(sh));
        l1 += w * numeric::abs(f);
        s += w * f;
      }
    }
    return s;
  };

  Real l1_raw(0);
  Complex total = node_sum(1.0, 0, 1, l1_raw);
  Real l1 = l1_raw;
  double h = 1.0;
  Complex prev = total;
  for (int level = 1; level <= quad.max_level; ++level) {
    h /= 2;
    Real l1_new(0);
    const Complex fresh = node_sum(h, 1, 2, l1_new);
    total = total / Real(2) + Real(h) * fresh;
    l1 = l1 / 2 + Real(h) * l1_new;
    const Real change = numeric::abs(total - prev);
    prev = total;
    if (level >= 3 && change < Real(prec.quad_tol) / 2) {
      check_digits(numeric::log_abs(l1), prec.quad_tol, "mordell_h");
      return total;
    }
  }
  throw ConvergenceError("mordell_h: tanh-sinh did not reach quad_tol by level " + std::to_string(quad.max_level));
}

Real h_bound(int kappa, const Real& alpha, const Real& beta, const Complex& z) {
  if (kappa < 1) throw DomainError("h_bound: kappa must be a positive integer");
  if (!(boost::multiprecision::abs(alpha) < Real(1) / 2)) throw DomainError("h_bound: need |alpha| < 1/2");
  if (!(beta >= Real(-1) / 2 && beta < Real(1) / 2)) throw DomainError("h_bound: need -1/2 <= beta < 1/2");
  if (!(z.re > 0)) throw DomainError("h_bound: need Re(z) > 0");
  const Real pi = numeric::pi();
  const Real r = (Complex(Real(1)) / z).re;
  const Real k(kappa);
  if (beta == Real(-1) / 2) {
    return (1 + boost::multiprecision::sqrt(k / r)) * boost::multiprecision::exp(-pi * r / (4 * k));
  }
  const Real sec = 1 / boost::multiprecision::abs(boost::multiprecision::cos(pi * beta));
  return sec * boost::multiprecision::sqrt(k / r) *
         boost::multiprecision::exp(-pi * beta * beta * r / k + pi * k * alpha * alpha / r);
}

Complex euler_phi(const Complex& tau, const PrecisionSpec& prec) {
  require_upper(tau, "euler_phi");
  numeric::ScopedPrecision guard(prec.digits);
  // |log prod_{n>K}(1 - q^n)| <= 2 |q|^{K+1} / (1 - |q|) once |q|^{K+1} <= 1/2
  const double log_q = -2 * kPiD * to_double(tau.im);
  const double log_tol = std::log(prec.series_tail_tol / 4);
  long k = 0;
  while (true) {
    const double lead = log_q * static_cast<double>(k + 1);
    if (lead <= -std::log(2.0) && std::log(2.0) + lead - std::log1p(-std::exp(log_q)) <= log_tol) break;
    if (++k > kMaxTerms) throw UsageError("euler_phi: Im(tau) too small for the product");
  }
  const Complex q = numeric::e2pi(tau);
  Complex qn = q;
  Complex prod(Real(1));
  for (long n = 1; n <= k; ++n) {
    prod *= Complex(Real(1)) - qn;
    qn *= q;
  }
  return prod;
}

}  // namespace ranklab::special
