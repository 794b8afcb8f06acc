#pragma once

#include <vector>

#include "ranklab/series/zqseries.hpp"

namespace ranklab::rank {

using series::Integer;

/// R(z;q) = sum_{k>=0} q^{k^2} / ((zq;q)_k (z^{-1}q;q)_k) truncated at q^order.
/// The coefficient of z^m q^n is N(m,n).
series::ZQSeries rank_generating_function(int order);

/// Exact N(m,n) for 0 <= n <= max_n.
class RankTable {
 public:
  explicit RankTable(series::ZQSeries generating_function);

  int max_n() const noexcept { return max_n_; }
  /// N(m,n) for any integer m (N(-m,n) = N(m,n)); zero for |m| > n.
  const Integer& count(int m, int n) const;
  Integer total(int n) const;
  const series::ZQSeries& generating_function() const noexcept { return gf_; }

 private:
  int max_n_;
  series::ZQSeries gf_;
  // entries_[n][m] for 0 <= m <= n
  std::vector<std::vector<Integer>> entries_;
};

RankTable rank_table(int n_max);

/// Exact N(r,t;n) for 0 <= r < t, 0 <= n <= max_n.
class RankModTable {
 public:
  RankModTable(int modulus, std::vector<std::vector<Integer>> entries);

  int modulus() const noexcept { return modulus_; }
  int max_n() const noexcept { return static_cast<int>(entries_.size()) - 1; }
  /// r is reduced modulo t.
  const Integer& count(int r, int n) const;

 private:
  int modulus_;
  // entries_[n][r]
  std::vector<std::vector<Integer>> entries_;
};

/// Folds N(r,t;n) = sum_k N(r + kt, n) over the finitely many |r + kt| <= n.
RankModTable rank_mod_table(const RankTable& table, int t);
RankModTable rank_mod_table(int t, int n_max);

}  // namespace ranklab::rank
