#pragma once

// Configurable-precision real and complex arithmetic on top of MPFR.
//
// Precision is set per evaluation with ScopedPrecision: every value created
// while a guard is alive carries that many decimal digits. The default
// precision lives in a process-wide slot, so evaluations at different
// precisions must not run concurrently.

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace ranklab::numeric {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

unsigned working_digits();

Real pi();
Real from_mpz(const mpz_class& z);
Real from_mpq(const mpq_class& q);
double to_double(const Real& x);
// Natural log of |x| as a double; -inf for zero.
double log_abs(const Real& x);

struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(double r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(std::complex<double> z) : re(z.real()), im(z.imag()) {}  // NOLINT

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const { return {-re, -im}; }
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator*(const Real& s, const Complex& z);
Complex operator*(const Complex& z, const Real& s);
Complex operator/(const Complex& z, const Real& s);

Complex imag_unit();

Complex conj(const Complex& z);
Real norm(const Complex& z);
Real abs(const Complex& z);
Complex exp(const Complex& z);
// e^{i theta}
Complex expi(const Real& theta);
// e^{2 pi i x}
Complex e2pi(const Complex& x);
// Principal branch, cut along the negative real axis.
Complex sqrt(const Complex& z);

std::complex<double> to_cdouble(const Complex& z);
// Fixed-format decimal rendering, used by reports.
std::string to_string(const Real& x, int significant_digits = 20);

}  // namespace ranklab::numeric
