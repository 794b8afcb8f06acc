#pragma once

#include <string>
#include <vector>

#include "ranklab/rank/rank_table.hpp"
#include "ranklab/series/qseries.hpp"

namespace ranklab::rank {

/// One cell where an inequality or identity fails. `first` is m or r
/// (or a, for pairwise checks), `n` the partition size.
struct ViolationRecord {
  std::string kind;
  int first = 0;
  int n = 0;
  Integer lhs;
  Integer rhs;

  friend bool operator==(const ViolationRecord&, const ViolationRecord&) = default;
};

/// Outcome of an exact verification: the claim holds iff no violations.
struct Verdict {
  std::vector<ViolationRecord> violations;

  bool holds() const noexcept { return violations.empty(); }
  explicit operator bool() const noexcept { return holds(); }
};

// --- monotonicity scans -----------------------------------------------------
// Scans report; they never throw on a violated inequality.

/// Every (m,n) with 0 <= m <= m_max, 1 <= n <= n_max and N(m,n) < N(m,n-1).
std::vector<ViolationRecord> check_weak_monotonicity(const RankTable& table, int n_max, int m_max);

/// The exceptional set the weak-monotonicity theorem predicts inside the window:
/// (1,7), (0,8), (3,11) and every (m, m+2).
std::vector<std::pair<int, int>> expected_weak_exceptions(int n_max, int m_max);

/// N(m,n) > N(m,n-1) for m >= 1, 2m+25 <= n <= n_max and for m = 0, 30 <= n <= n_max.
std::vector<ViolationRecord> check_strict_monotonicity(const RankTable& table, int n_max);

/// N(0,n) >= N(0,n-1) + 2 for n_min <= n <= n_max.
std::vector<ViolationRecord> check_N0_increment(const RankTable& table, int n_max, int n_min = 15);

/// M = max(2r + 25, 2(t - r) + 25).
int rank_mod_threshold(int r, int t);

/// N(r,t;n) >= N(r,t;n-1) for every r < t and M(r,t) <= n <= n_max.
std::vector<ViolationRecord> check_rank_mod_monotonicity(const RankTable& table, int t, int n_max);

// --- lemma suite --------------------------------------------------------------

/// (sum_j q^{3j}) (sum_k q^{4k}) truncated at n_max.
series::QSeries postage_series(int n_max);
/// Coefficient of q^n is >= 2 for 18 <= n <= n_max.
Verdict verify_lemma_postage(int n_max);

/// (1 - q^{m+1}) / ((1 - q^2)(1 - q^3)) truncated at n_max.
series::QSeries lemma_nonneg_series(int m, int n_max);
/// All coefficients of lemma_nonneg_series(m, n_max) are >= 0; m >= 1.
Verdict verify_lemma_nonneg(int m, int n_max);

/// Both two-variable displays of the (aq)_k (q/a)_k expansion lemma (k = 1, 2),
/// compared coefficientwise for |m| <= m_band.
Verdict verify_lemma_fmk(int n_max, int m_band);

/// sum_n (1-q) q^{n^2}/((aq)_n (q/a)_n) equals
///   1 - q + sum_{n>=1} q^{n^2} f_{0,n}
///   + sum_{m>=1} (a^m + a^{-m}) (q f_{m,1} + q^4 f_{m,2} + sum_{n>=3} q^{n^2} f_{m,n}),
/// where sum_m a^m f_{m,k} = (1-q)/((aq)_k (q/a)_k). Compared for |m| <= m_band.
Verdict verify_fmk_decomposition(int n_max, int m_band);

/// q^12 / ((1-q^3)(1-q^4)) - sum_{n>=0} q^{2n+2} truncated at n_max.
series::QSeries gap_series(int n_max);
/// Coefficient of q^n is >= 1 for 30 <= n <= n_max.
Verdict verify_gap_series_positivity(int n_max);

// --- generating-function identity ------------------------------------------------

struct IdentityDeviation {
  int t = 0;
  double max_abs_deviation = 0;   // |reconstructed - exact| including imaginary part
  double max_imag = 0;            // largest |Im(reconstructed)|
  double max_form_gap = 0;        // gap between the full and the conjugate-paired forms
  int witness_r = 0;
  int witness_n = 0;
  double tol = 0;
  bool passed() const noexcept { return max_abs_deviation < tol; }
};

/// Reconstructs N(r,t;n) = (1/t)[p(n) + sum_{j=1}^{t-1} zeta_t^{-rj} R(zeta_t^j;q)_n]
/// numerically and compares against the exact fold, for all r < t, n <= n_max.
/// Also evaluates the conjugate-paired form
///   (1/t)[p(n) + sum_{j<=(t-1)/2} (zeta^{rj} + zeta^{-rj}) R(zeta^j) + delta_t (-1)^r R(-1)]
/// and records its gap to the full form.
IdentityDeviation verify_generating_identity(const RankTable& table, int t, int n_max, double tol,
                                             unsigned digits = 30);

}  // namespace ranklab::rank
