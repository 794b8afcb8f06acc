#include "ranklab/series/zqseries.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ranklab/errors.hpp"

namespace ranklab::series {

namespace {

void require_same_order(const ZQSeries& a, const ZQSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw UsageError(std::string(op) + ": truncation orders differ (" + std::to_string(a.order()) +
                     " vs " + std::to_string(b.order()) + ")");
  }
}

void check_factor(int s, int j) {
  if (s < -1 || s > 1) throw UsageError("factor z-exponent must be -1, 0 or 1");
  if (j < 1) throw DomainError("factor 1 - z^s q^0 is not a unit in the truncated ring");
}

}  // namespace

ZQSeries::ZQSeries(int order) : order_(order) {
  if (order < 0) throw UsageError("ZQSeries: truncation order must be >= 0");
  rows_.assign(static_cast<std::size_t>(order) + 1, std::vector<Integer>(1));
}

ZQSeries ZQSeries::one(int order) { return monomial(order, 0, 0); }

ZQSeries ZQSeries::monomial(int order, int z_exp, int q_exp, const Integer& c) {
  ZQSeries s(order);
  if (q_exp < 0) throw UsageError("ZQSeries::monomial: negative q-exponent");
  if (q_exp <= order) s.at(z_exp, q_exp) = c;
  return s;
}

ZQSeries ZQSeries::from_terms(int order, const std::vector<Term>& terms) {
  ZQSeries s(order);
  for (const auto& t : terms) {
    if (t.q_exp < 0) throw UsageError("ZQSeries::from_terms: negative q-exponent");
    if (t.q_exp <= order) s.at(t.z_exp, t.q_exp) += t.coeff;
  }
  return s;
}

ZQSeries ZQSeries::from_qseries(const QSeries& q) { return from_qseries(q.order(), q, 0, 0); }

ZQSeries ZQSeries::from_qseries(int order, const QSeries& q, int z_exp, int q_shift) {
  ZQSeries s(order);
  for (int n = 0; n <= q.order(); ++n) {
    const int target = n + q_shift;
    if (target < 0 || target > order) continue;
    if (q[n] != 0) s.at(z_exp, target) = q[n];
  }
  return s;
}

int ZQSeries::band(int n) const {
  const auto& row = rows_.at(static_cast<std::size_t>(n));
  const int b = stored_band(n);
  for (int k = b; k >= 0; --k) {
    if (row[static_cast<std::size_t>(b + k)] != 0 || row[static_cast<std::size_t>(b - k)] != 0) return k;
  }
  return -1;
}

Integer ZQSeries::coeff(int z_exp, int q_exp) const {
  if (q_exp < 0 || q_exp > order_) return 0;
  const int b = stored_band(q_exp);
  if (std::abs(z_exp) > b) return 0;
  return rows_[static_cast<std::size_t>(q_exp)][static_cast<std::size_t>(z_exp + b)];
}

QSeries ZQSeries::z_coefficient(int z_exp) const {
  std::vector<Integer> c(static_cast<std::size_t>(order_) + 1);
  for (int n = 0; n <= order_; ++n) c[static_cast<std::size_t>(n)] = coeff(z_exp, n);
  return QSeries(order_, std::move(c));
}

Integer ZQSeries::row_sum(int q_exp) const {
  Integer s = 0;
  for (const auto& c : rows_.at(static_cast<std::size_t>(q_exp))) s += c;
  return s;
}

ZQSeries ZQSeries::truncated(int order) const {
  if (order > order_) throw UsageError("ZQSeries::truncated: cannot raise the truncation order");
  ZQSeries s(order);
  std::copy(rows_.begin(), rows_.begin() + order + 1, s.rows_.begin());
  return s;
}

ZQSeries ZQSeries::q_shifted(int shift) const {
  if (shift < 0) throw UsageError("ZQSeries::q_shifted: negative shift");
  ZQSeries s(order_);
  for (int n = 0; n + shift <= order_; ++n) {
    s.rows_[static_cast<std::size_t>(n + shift)] = rows_[static_cast<std::size_t>(n)];
  }
  return s;
}

ZQSeries ZQSeries::q_lifted(int order, int shift) const {
  if (shift < 0) throw UsageError("ZQSeries::q_lifted: negative shift");
  if (order > order_ + shift) throw UsageError("ZQSeries::q_lifted: target order exceeds known coefficients");
  ZQSeries s(order);
  for (int n = 0; n + shift <= order; ++n) {
    s.rows_[static_cast<std::size_t>(n + shift)] = rows_[static_cast<std::size_t>(n)];
  }
  return s;
}

void ZQSeries::widen(int n, int band) {
  auto& row = rows_[static_cast<std::size_t>(n)];
  const int old = stored_band(n);
  if (band <= old) return;
  std::vector<Integer> wider(static_cast<std::size_t>(2 * band + 1));
  for (int k = 0; k < static_cast<int>(row.size()); ++k) {
    wider[static_cast<std::size_t>(k + band - old)] = std::move(row[static_cast<std::size_t>(k)]);
  }
  row = std::move(wider);
}

Integer& ZQSeries::at(int z_exp, int q_exp) {
  widen(q_exp, std::abs(z_exp));
  return rows_[static_cast<std::size_t>(q_exp)][static_cast<std::size_t>(z_exp + stored_band(q_exp))];
}

void ZQSeries::add_row_shifted(int dst_n, const std::vector<Integer>& src, int z_shift, bool subtract) {
  const int sb = (static_cast<int>(src.size()) - 1) / 2;
  widen(dst_n, sb + std::abs(z_shift));
  auto& dst = rows_[static_cast<std::size_t>(dst_n)];
  const int db = stored_band(dst_n);
  for (int k = 0; k < static_cast<int>(src.size()); ++k) {
    const auto& c = src[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    auto& d = dst[static_cast<std::size_t>(k - sb + z_shift + db)];
    if (subtract) {
      d -= c;
    } else {
      d += c;
    }
  }
}

ZQSeries ZQSeries::operator-() const {
  ZQSeries r(*this);
  for (auto& row : r.rows_) {
    for (auto& c : row) c = -c;
  }
  return r;
}

ZQSeries operator+(const ZQSeries& a, const ZQSeries& b) {
  require_same_order(a, b, "ZQSeries +");
  ZQSeries r(a);
  for (int n = 0; n <= a.order_; ++n) r.add_row_shifted(n, b.rows_[static_cast<std::size_t>(n)], 0, false);
  return r;
}

ZQSeries operator-(const ZQSeries& a, const ZQSeries& b) {
  require_same_order(a, b, "ZQSeries -");
  ZQSeries r(a);
  for (int n = 0; n <= a.order_; ++n) r.add_row_shifted(n, b.rows_[static_cast<std::size_t>(n)], 0, true);
  return r;
}

ZQSeries operator*(const ZQSeries& a, const ZQSeries& b) {
  require_same_order(a, b, "ZQSeries *");
  const int order = a.order_;
  ZQSeries r(order);
  for (int i = 0; i <= order; ++i) {
    const int ba = a.band(i);
    if (ba < 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      const int bb = b.band(j);
      if (bb < 0) continue;
      r.widen(i + j, ba + bb);
      auto& dst = r.rows_[static_cast<std::size_t>(i + j)];
      const int db = r.stored_band(i + j);
      const int sa = a.stored_band(i);
      const int sb = b.stored_band(j);
      const auto& ra = a.rows_[static_cast<std::size_t>(i)];
      const auto& rb = b.rows_[static_cast<std::size_t>(j)];
      for (int ma = -ba; ma <= ba; ++ma) {
        const auto& ca = ra[static_cast<std::size_t>(ma + sa)];
        if (ca == 0) continue;
        for (int mb = -bb; mb <= bb; ++mb) {
          const auto& cb = rb[static_cast<std::size_t>(mb + sb)];
          if (cb == 0) continue;
          mpz_addmul(dst[static_cast<std::size_t>(ma + mb + db)].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
      }
    }
  }
  return r;
}

bool operator==(const ZQSeries& a, const ZQSeries& b) {
  if (a.order_ != b.order_) return false;
  for (int n = 0; n <= a.order_; ++n) {
    const int band = std::max(a.stored_band(n), b.stored_band(n));
    for (int m = -band; m <= band; ++m) {
      if (a.coeff(m, n) != b.coeff(m, n)) return false;
    }
  }
  return true;
}

ZQSeries zqs_mul(const ZQSeries& a, const ZQSeries& b) { return a * b; }

ZQSeries zqs_invert_factor(int s, int j, int order) {
  check_factor(s, j);
  ZQSeries r(order);
  for (int k = 0; k * j <= order; ++k) r = r + ZQSeries::monomial(order, s * k, j * k);
  return r;
}

ZQSeries zqs_mul_factor(const ZQSeries& x, int s, int j) {
  check_factor(s, j);
  ZQSeries y(x);
  for (int n = j; n <= x.order_; ++n) y.add_row_shifted(n, x.rows_[static_cast<std::size_t>(n - j)], s, true);
  return y;
}

ZQSeries zqs_div_factor(const ZQSeries& x, int s, int j) {
  check_factor(s, j);
  ZQSeries y(x);
  // rows below n are final by the time row n is updated
  for (int n = j; n <= y.order_; ++n) {
    const auto src = y.rows_[static_cast<std::size_t>(n - j)];
    y.add_row_shifted(n, src, s, false);
  }
  return y;
}

std::vector<numeric::Complex> zqs_eval_root_of_unity(const ZQSeries& a, int j, int t, unsigned digits) {
  if (t < 1) throw DomainError("zqs_eval_root_of_unity: t must be >= 1");
  if (j < 0 || j >= t) throw UsageError("zqs_eval_root_of_unity: need 0 <= j < t");
  numeric::ScopedPrecision guard(digits);
  // exact reduction by residue class of m first; only t numeric terms per row
  std::vector<numeric::Complex> roots;
  roots.reserve(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) {
    const numeric::Real frac = numeric::Real(static_cast<long>((static_cast<long>(j) * k) % t)) / t;
    roots.push_back(numeric::e2pi(numeric::Complex(frac)));
  }
  std::vector<numeric::Complex> out;
  out.reserve(static_cast<std::size_t>(a.order()) + 1);
  std::vector<Integer> classes(static_cast<std::size_t>(t));
  for (int n = 0; n <= a.order(); ++n) {
    std::fill(classes.begin(), classes.end(), Integer(0));
    const int b = a.band(n);
    for (int m = -b; m <= b; ++m) {
      const int k = ((m % t) + t) % t;
      classes[static_cast<std::size_t>(k)] += a.coeff(m, n);
    }
    numeric::Complex v;
    for (int k = 0; k < t; ++k) {
      if (classes[static_cast<std::size_t>(k)] == 0) continue;
      v += numeric::from_mpz(classes[static_cast<std::size_t>(k)]) * roots[static_cast<std::size_t>(k)];
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ranklab::series
