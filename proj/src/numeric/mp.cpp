#include "ranklab/numeric/mp.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ranklab::numeric {

ScopedPrecision::ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
  Real::default_precision(digits10);
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_); }

unsigned working_digits() { return Real::default_precision(); }

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real from_mpz(const mpz_class& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real from_mpq(const mpq_class& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

double log_abs(const Real& x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  // exponent/mantissa split survives magnitudes far outside double range
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDN);
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

Complex& Complex::operator+=(const Complex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  Real r = re * o.re - im * o.im;
  Real i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  const Real d = o.re * o.re + o.im * o.im;
  Real r = (re * o.re + im * o.im) / d;
  Real i = (im * o.re - re * o.im) / d;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator*(const Real& s, const Complex& z) { return {s * z.re, s * z.im}; }
Complex operator*(const Complex& z, const Real& s) { return {z.re * s, z.im * s}; }
Complex operator/(const Complex& z, const Real& s) { return {z.re / s, z.im / s}; }

Complex imag_unit() { return {Real(0), Real(1)}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) { return boost::multiprecision::sqrt(norm(z)); }

Complex exp(const Complex& z) {
  const Real m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

Complex expi(const Real& theta) {
  return {boost::multiprecision::cos(theta), boost::multiprecision::sin(theta)};
}

Complex e2pi(const Complex& x) {
  const Real two_pi = 2 * pi();
  // 2 pi i (a + ib) = -2 pi b + 2 pi i a
  return exp(Complex{-two_pi * x.im, two_pi * x.re});
}

Complex sqrt(const Complex& z) {
  if (z.re == 0 && z.im == 0) return {};
  const Real r = abs(z);
  if (z.re >= 0) {
    const Real t = boost::multiprecision::sqrt((r + z.re) / 2);
    return {t, z.im / (2 * t)};
  }
  const Real t = boost::multiprecision::sqrt((r - z.re) / 2);
  const Real re = boost::multiprecision::abs(z.im) / (2 * t);
  return {re, z.im < 0 ? Real(-t) : t};
}

std::complex<double> to_cdouble(const Complex& z) { return {to_double(z.re), to_double(z.im)}; }

std::string to_string(const Real& x, int significant_digits) {
  std::ostringstream os;
  os.precision(significant_digits);
  os << std::scientific << x;
  return os.str();
}

}  // namespace ranklab::numeric
