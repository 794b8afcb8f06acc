#include "ranklab/special/precision.hpp"

#include <cmath>
#include <string>

#include "ranklab/errors.hpp"

namespace ranklab::special {

PrecisionSpec PrecisionSpec::for_digits(unsigned digits) {
  PrecisionSpec p;
  p.digits = digits;
  p.series_tail_tol = std::pow(10.0, -static_cast<double>(digits) + 8);
  p.quad_tol = std::pow(10.0, -static_cast<double>(digits) + 12);
  return p;
}

PrecisionSpec PrecisionSpec::for_eps(double eps) { return for_digits(eps >= 0.5 ? 30 : 60); }

void PrecisionSpec::validate() const {
  if (digits < 16) throw UsageError("precision: need at least 16 digits, got " + std::to_string(digits));
  if (!(series_tail_tol > 0) || !(quad_tol > 0)) throw UsageError("precision: tolerances must be positive");
  const double finest = std::min(series_tail_tol, quad_tol);
  const auto needed = static_cast<unsigned>(std::ceil(-std::log10(finest))) + 2;
  if (needed > digits) {
    throw PrecisionError("precision: tolerance " + std::to_string(finest) + " needs about " +
                             std::to_string(needed) + " digits",
                         needed);
  }
}

HalfPlanePoint::HalfPlanePoint(Complex u, Complex v, Complex tau)
    : u_(std::move(u)), v_(std::move(v)), tau_(std::move(tau)) {
  if (!(tau_.im > 0)) throw DomainError("HalfPlanePoint: Im(tau) must be positive");
}

HalfPlanePoint HalfPlanePoint::from_eps(double eps, Complex u, Complex v) {
  if (!(eps > 0)) throw DomainError("HalfPlanePoint: eps must be positive");
  HalfPlanePoint p(std::move(u), std::move(v), Complex(Real(0), Real(eps) / (2 * numeric::pi())));
  p.eps_ = eps;
  return p;
}

Complex HalfPlanePoint::tau() const {
  if (eps_) return Complex(Real(0), Real(*eps_) / (2 * numeric::pi()));
  return tau_;
}

Complex HalfPlanePoint::q() const { return numeric::e2pi(tau()); }

Complex HalfPlanePoint::q0() const { return numeric::e2pi(Complex(Real(-1)) / tau()); }

}  // namespace ranklab::special
