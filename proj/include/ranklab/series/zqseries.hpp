#pragma once

#include <vector>

#include "ranklab/numeric/mp.hpp"
#include "ranklab/series/qseries.hpp"

namespace ranklab::series {

/// Two-variable series: Laurent polynomial in z for every power of q,
/// truncated at q^N.
///
/// Row n stores the coefficients of z^m q^n densely for |m| <= stored band.
/// band(n) reports the tight bound: the largest |m| with a nonzero
/// coefficient.
class ZQSeries {
 public:
  explicit ZQSeries(int order);

  struct Term {
    int z_exp;
    int q_exp;
    Integer coeff;
  };

  static ZQSeries one(int order);
  static ZQSeries monomial(int order, int z_exp, int q_exp, const Integer& c = 1);
  static ZQSeries from_terms(int order, const std::vector<Term>& terms);
  static ZQSeries from_qseries(const QSeries& s);
  /// q^{q_shift} z^{z_exp} s(q), truncated to `order`.
  static ZQSeries from_qseries(int order, const QSeries& s, int z_exp, int q_shift);

  int order() const noexcept { return order_; }
  /// Largest |m| with a nonzero coefficient of z^m q^n; -1 when the row is zero.
  int band(int n) const;
  Integer coeff(int z_exp, int q_exp) const;
  /// The coefficient of z^m as a series in q.
  QSeries z_coefficient(int z_exp) const;
  /// Sum over m of the coefficient of z^m q^n.
  Integer row_sum(int q_exp) const;

  ZQSeries truncated(int order) const;
  /// q^shift * this, keeping the same truncation order.
  ZQSeries q_shifted(int shift) const;
  /// q^shift * this as a series of truncation order `order`; needs order <= order() + shift.
  ZQSeries q_lifted(int order, int shift) const;

  ZQSeries operator-() const;
  friend ZQSeries operator+(const ZQSeries& a, const ZQSeries& b);
  friend ZQSeries operator-(const ZQSeries& a, const ZQSeries& b);
  friend ZQSeries operator*(const ZQSeries& a, const ZQSeries& b);
  friend bool operator==(const ZQSeries& a, const ZQSeries& b);

  friend ZQSeries zqs_mul_factor(const ZQSeries& x, int s, int j);
  friend ZQSeries zqs_div_factor(const ZQSeries& x, int s, int j);

 private:
  int stored_band(int n) const { return (static_cast<int>(rows_[static_cast<std::size_t>(n)].size()) - 1) / 2; }
  void widen(int n, int band);
  Integer& at(int z_exp, int q_exp);
  void add_row_shifted(int dst_n, const std::vector<Integer>& src, int z_shift, bool subtract);

  int order_;
  std::vector<std::vector<Integer>> rows_;
};

ZQSeries zqs_mul(const ZQSeries& a, const ZQSeries& b);

/// 1 / (1 - z^s q^j) truncated; s in {-1, 0, 1}, j >= 1.
ZQSeries zqs_invert_factor(int s, int j, int order);

/// x * (1 - z^s q^j), computed directly.
ZQSeries zqs_mul_factor(const ZQSeries& x, int s, int j);

/// x / (1 - z^s q^j) by the recurrence y(m,n) = x(m,n) + y(m-s, n-j).
/// Equal to zqs_mul(x, zqs_invert_factor(s, j, N)) at a fraction of the cost.
ZQSeries zqs_div_factor(const ZQSeries& x, int s, int j);

/// Substitutes z = exp(2 pi i j / t): returns, for every n, the complex
/// number sum_m c(m,n) exp(2 pi i j m / t) at `digits` decimal digits.
std::vector<numeric::Complex> zqs_eval_root_of_unity(const ZQSeries& a, int j, int t, unsigned digits);

}  // namespace ranklab::series
