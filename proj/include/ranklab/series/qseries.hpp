#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace ranklab::series {

using Integer = mpz_class;

/// Truncated power series in q with exact integer coefficients.
///
/// Holds the coefficients of q^0 .. q^N where N is the truncation order.
/// The order is fixed at construction; arithmetic between series of
/// different orders is a UsageError rather than a silent re-truncation.
class QSeries {
 public:
  explicit QSeries(int order);
  QSeries(int order, std::vector<Integer> coeffs);

  static QSeries one(int order);
  static QSeries monomial(int order, int exponent, const Integer& c = 1);
  /// 1 / (1 - q^step) = sum_k q^{step k}
  static QSeries geometric(int order, int step);

  int order() const noexcept { return order_; }
  const Integer& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  int order_;
  std::vector<Integer> coeffs_;
};

QSeries qs_mul(const QSeries& a, const QSeries& b);

/// Multiplicative inverse; the constant term must be +1 or -1.
QSeries qs_invert(const QSeries& a);

/// prod_{k=1}^{N} (1 - q^k) truncated at N.
QSeries euler_product(int order);

}  // namespace ranklab::series
