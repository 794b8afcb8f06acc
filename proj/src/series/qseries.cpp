#include "ranklab/series/qseries.hpp"

#include <string>

#include "ranklab/errors.hpp"

namespace ranklab::series {

namespace {

void require_same_order(const QSeries& a, const QSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

}  // namespace

QSeries::QSeries(int order) : order_(order) {
  if (order < 0) throw UsageError("QSeries: truncation order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(int order, std::vector<Integer> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw UsageError("QSeries: truncation order must be >= 0");
  if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
    throw UsageError("QSeries: expected " + std::to_string(order + 1) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
  }
}

QSeries QSeries::one(int order) { return monomial(order, 0); }

QSeries QSeries::monomial(int order, int exponent, const Integer& c) {
  QSeries s(order);
  if (exponent < 0) throw UsageError("QSeries::monomial: negative exponent");
  if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return s;
}

QSeries QSeries::geometric(int order, int step) {
  if (step < 1) throw DomainError("QSeries::geometric: step must be >= 1");
  QSeries s(order);
  for (int n = 0; n <= order; n += step) s.coeffs_[static_cast<std::size_t>(n)] = 1;
  return s;
}

QSeries QSeries::operator-() const {
  QSeries r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "QSeries +");
  QSeries r(a);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "QSeries -");
  QSeries r(a);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "QSeries *");
  QSeries r(a.order_);
  const auto n = r.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }

QSeries qs_invert(const QSeries& a) {
  const Integer& c0 = a[0];
  if (c0 != 1 && c0 != -1) {
    throw DomainError("qs_invert: constant term " + c0.get_str() + " is not a unit");
  }
  const int order = a.order();
  std::vector<Integer> inv(static_cast<std::size_t>(order) + 1);
  // c0^{-1} = c0 for units
  inv[0] = c0;
  for (int n = 1; n <= order; ++n) {
    Integer acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (a[k] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), inv[static_cast<std::size_t>(n - k)].get_mpz_t());
    }
    inv[static_cast<std::size_t>(n)] = -acc * c0;
  }
  return QSeries(order, std::move(inv));
}

QSeries euler_product(int order) {
  std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) {
    // multiply in place by (1 - q^k), high exponents first
    for (int n = order; n >= k; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - k)];
  }
  return QSeries(order, std::move(c));
}

}  // namespace ranklab::series
