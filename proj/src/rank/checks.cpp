#include "ranklab/rank/checks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ranklab/errors.hpp"
#include "ranklab/numeric/mp.hpp"
#include "ranklab/rank/partitions.hpp"
#include "ranklab/series/zqseries.hpp"

namespace ranklab::rank {

using series::QSeries;
using series::ZQSeries;

namespace {

void require_in_table(const RankTable& table, int n_max, const char* who) {
  if (n_max > table.max_n()) {
    throw UsageError(std::string(who) + ": n_max = " + std::to_string(n_max) + " exceeds table size " +
                     std::to_string(table.max_n()));
  }
}

// (1 - q) / ((aq)_k (q/a)_k), built by full multiplication with inverted factors.
ZQSeries fmk_generating(int k, int order) {
  ZQSeries f = ZQSeries::one(order) - ZQSeries::monomial(order, 0, 1);
  for (int i = 1; i <= k; ++i) {
    f = series::zqs_mul(f, series::zqs_invert_factor(1, i, order));
    f = series::zqs_mul(f, series::zqs_invert_factor(-1, i, order));
  }
  return f;
}

void compare_bands(const ZQSeries& lhs, const ZQSeries& rhs, int m_band, const std::string& kind, Verdict& out) {
  for (int n = 0; n <= lhs.order(); ++n) {
    for (int m = -m_band; m <= m_band; ++m) {
      Integer a = lhs.coeff(m, n);
      Integer b = rhs.coeff(m, n);
      if (a != b) out.violations.push_back({kind, m, n, std::move(a), std::move(b)});
    }
  }
}

QSeries inverse_of_product(int order, std::initializer_list<int> steps) {
  QSeries s = QSeries::one(order);
  for (int k : steps) s = s * QSeries::geometric(order, k);
  return s;
}

}  // namespace

std::vector<ViolationRecord> check_weak_monotonicity(const RankTable& table, int n_max, int m_max) {
  require_in_table(table, n_max, "check_weak_monotonicity");
  std::vector<ViolationRecord> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      const auto& cur = table.count(m, n);
      const auto& prev = table.count(m, n - 1);
      if (cur < prev) out.push_back({"weak_monotonicity", m, n, cur, prev});
    }
  }
  return out;
}

std::vector<std::pair<int, int>> expected_weak_exceptions(int n_max, int m_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 0; m <= m_max; ++m) {
      const bool special = (m == 1 && n == 7) || (m == 0 && n == 8) || (m == 3 && n == 11);
      if (special || n == m + 2) out.emplace_back(m, n);
    }
  }
  return out;
}

std::vector<ViolationRecord> check_strict_monotonicity(const RankTable& table, int n_max) {
  require_in_table(table, n_max, "check_strict_monotonicity");
  std::vector<ViolationRecord> out;
  for (int n = 30; n <= n_max; ++n) {
    if (!(table.count(0, n) > table.count(0, n - 1))) {
      out.push_back({"strict_monotonicity", 0, n, table.count(0, n), table.count(0, n - 1)});
    }
  }
  for (int m = 1; 2 * m + 25 <= n_max; ++m) {
    for (int n = 2 * m + 25; n <= n_max; ++n) {
      if (!(table.count(m, n) > table.count(m, n - 1))) {
        out.push_back({"strict_monotonicity", m, n, table.count(m, n), table.count(m, n - 1)});
      }
    }
  }
  return out;
}

std::vector<ViolationRecord> check_N0_increment(const RankTable& table, int n_max, int n_min) {
  require_in_table(table, n_max, "check_N0_increment");
  std::vector<ViolationRecord> out;
  for (int n = std::max(n_min, 1); n <= n_max; ++n) {
    Integer rhs = table.count(0, n - 1) + 2;
    if (table.count(0, n) < rhs) out.push_back({"N0_increment", 0, n, table.count(0, n), std::move(rhs)});
  }
  return out;
}

int rank_mod_threshold(int r, int t) { return std::max(2 * r + 25, 2 * (t - r) + 25); }

std::vector<ViolationRecord> check_rank_mod_monotonicity(const RankTable& table, int t, int n_max) {
  require_in_table(table, n_max, "check_rank_mod_monotonicity");
  const RankModTable mod = rank_mod_table(table, t);
  std::vector<ViolationRecord> out;
  for (int r = 0; r < t; ++r) {
    for (int n = std::max(rank_mod_threshold(r, t), 1); n <= n_max; ++n) {
      if (mod.count(r, n) < mod.count(r, n - 1)) {
        out.push_back({"rank_mod_monotonicity", r, n, mod.count(r, n), mod.count(r, n - 1)});
      }
    }
  }
  return out;
}

QSeries postage_series(int n_max) { return QSeries::geometric(n_max, 3) * QSeries::geometric(n_max, 4); }

Verdict verify_lemma_postage(int n_max) {
  Verdict v;
  const QSeries s = postage_series(n_max);
  for (int n = 18; n <= n_max; ++n) {
    if (s[n] < 2) v.violations.push_back({"lemma_postage", 0, n, s[n], 2});
  }
  return v;
}

QSeries lemma_nonneg_series(int m, int n_max) {
  if (m < 1) throw DomainError("lemma_nonneg_series: m must be a positive integer");
  const QSeries numerator = QSeries::one(n_max) - QSeries::monomial(n_max, m + 1);
  return numerator * inverse_of_product(n_max, {2, 3});
}

Verdict verify_lemma_nonneg(int m, int n_max) {
  Verdict v;
  const QSeries s = lemma_nonneg_series(m, n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (s[n] < 0) v.violations.push_back({"lemma_nonneg(m=" + std::to_string(m) + ")", m, n, s[n], 0});
  }
  return v;
}

Verdict verify_lemma_fmk(int n_max, int m_band) {
  Verdict v;
  // first display: sum_n sum_{|m|<=n} (-1)^{m+n} a^m q^n
  {
    const ZQSeries lhs = fmk_generating(1, n_max);
    std::vector<ZQSeries::Term> terms;
    for (int n = 0; n <= n_max; ++n) {
      for (int m = -n; m <= n; ++m) terms.push_back({m, n, ((m + n) % 2 == 0) ? 1 : -1});
    }
    compare_bands(lhs, ZQSeries::from_terms(n_max, terms), m_band, "lemma_fmk_k1", v);
  }
  // second display
  {
    const ZQSeries lhs = fmk_generating(2, n_max);
    const QSeries inv34 = inverse_of_product(n_max, {3, 4});
    QSeries z0 = -QSeries::monomial(n_max, 1) + QSeries::geometric(n_max, 3) +
                 QSeries::monomial(n_max, 2) * QSeries::geometric(n_max, 4) + QSeries::monomial(n_max, 8) * inv34;
    ZQSeries rhs = ZQSeries::from_qseries(z0);
    for (int m = 1; m <= std::min(m_band, n_max); ++m) {
      const QSeries inner = lemma_nonneg_series(m, n_max) + QSeries::monomial(n_max, m + 3) * inv34;
      const QSeries piece = QSeries::monomial(n_max, m) * inner;
      rhs = rhs + ZQSeries::from_qseries(n_max, piece, m, 0) + ZQSeries::from_qseries(n_max, piece, -m, 0);
    }
    compare_bands(lhs, rhs, m_band, "lemma_fmk_k2", v);
  }
  return v;
}

Verdict verify_fmk_decomposition(int n_max, int m_band) {
  Verdict v;
  const ZQSeries lhs = series::zqs_mul_factor(rank_generating_function(n_max), 0, 1);

  // f_{m,k} for every k with k^2 <= n_max, each at the order it is needed
  std::vector<ZQSeries> fk;
  fk.emplace_back(ZQSeries::one(0));  // k = 0 unused
  for (int k = 1; k * k <= n_max; ++k) {
    fk.push_back(fmk_generating(k, n_max - k * k));
    const ZQSeries& f = fk.back();
    for (int n = 0; n <= f.order(); ++n) {
      for (int m = 1; m <= f.band(n); ++m) {
        if (f.coeff(m, n) != f.coeff(-m, n)) {
          v.violations.push_back({"fmk_symmetry(k=" + std::to_string(k) + ")", m, n, f.coeff(m, n), f.coeff(-m, n)});
        }
      }
    }
  }

  auto q_part = [&](int m, int k) {
    // q^{k^2} f_{m,k}(q) at the full order
    const ZQSeries& f = fk[static_cast<std::size_t>(k)];
    return ZQSeries::from_qseries(n_max, f.z_coefficient(m), 0, k * k);
  };

  ZQSeries rhs = ZQSeries::one(n_max) - ZQSeries::monomial(n_max, 0, 1);
  for (int k = 1; k * k <= n_max; ++k) rhs = rhs + q_part(0, k);
  for (int m = 1; m <= std::min(m_band, n_max); ++m) {
    ZQSeries g(n_max);
    for (int k = 1; k * k <= n_max; ++k) g = g + q_part(m, k);
    const QSeries gm = g.z_coefficient(0);
    rhs = rhs + ZQSeries::from_qseries(n_max, gm, m, 0) + ZQSeries::from_qseries(n_max, gm, -m, 0);
  }
  compare_bands(lhs, rhs, std::min(m_band, n_max), "fmk_decomposition", v);
  return v;
}

QSeries gap_series(int n_max) {
  QSeries s = QSeries::monomial(n_max, 12) * inverse_of_product(n_max, {3, 4});
  QSeries even(n_max);
  std::vector<Integer> c(static_cast<std::size_t>(n_max) + 1);
  for (int n = 2; n <= n_max; n += 2) c[static_cast<std::size_t>(n)] = 1;
  return s - QSeries(n_max, std::move(c));
}

Verdict verify_gap_series_positivity(int n_max) {
  Verdict v;
  const QSeries s = gap_series(n_max);
  for (int n = 30; n <= n_max; ++n) {
    if (s[n] < 1) v.violations.push_back({"gap_series_positivity", 0, n, s[n], 1});
  }
  return v;
}

IdentityDeviation verify_generating_identity(const RankTable& table, int t, int n_max, double tol, unsigned digits) {
  if (t < 1) throw DomainError("verify_generating_identity: t must be >= 1");
  require_in_table(table, n_max, "verify_generating_identity");
  using numeric::Complex;
  using numeric::Real;

  numeric::ScopedPrecision guard(digits);
  const ZQSeries gf = table.generating_function().truncated(n_max);
  const RankModTable exact = rank_mod_table(table, t);

  // evaluations[j][n] = R(zeta_t^j; q) coefficient of q^n
  std::vector<std::vector<Complex>> evaluations;
  for (int j = 0; j < t; ++j) evaluations.push_back(series::zqs_eval_root_of_unity(gf, j, t, digits));

  IdentityDeviation out;
  out.t = t;
  out.tol = tol;
  const Real inv_t = Real(1) / t;
  for (int r = 0; r < t; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      const Complex p_n = numeric::from_mpz(gf.row_sum(n));
      Complex full = p_n;
      for (int j = 1; j < t; ++j) {
        const Real frac = Real(static_cast<long>((static_cast<long>(t) - (static_cast<long>(r) * j) % t) % t)) / t;
        full += numeric::e2pi(Complex(frac)) * evaluations[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
      }
      full = full * inv_t;

      Complex paired = p_n;
      for (int j = 1; 2 * j <= t - 1; ++j) {
        const Real frac = Real(static_cast<long>((static_cast<long>(r) * j) % t)) / t;
        const Complex w = numeric::e2pi(Complex(frac));
        paired += (w + numeric::conj(w)) * evaluations[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)];
      }
      if (t % 2 == 0) {
        const Complex& r_minus_one = evaluations[static_cast<std::size_t>(t / 2)][static_cast<std::size_t>(n)];
        paired += (r % 2 == 0) ? r_minus_one : -r_minus_one;
      }
      paired = paired * inv_t;

      const double dev = numeric::to_double(numeric::abs(full - Complex(numeric::from_mpz(exact.count(r, n)))));
      const double imag = std::fabs(numeric::to_double(full.im));
      const double gap = numeric::to_double(numeric::abs(full - paired));
      if (dev > out.max_abs_deviation) {
        out.max_abs_deviation = dev;
        out.witness_r = r;
        out.witness_n = n;
      }
      out.max_imag = std::max(out.max_imag, imag);
      out.max_form_gap = std::max(out.max_form_gap, gap);
    }
  }
  return out;
}

}  // namespace ranklab::rank
