#include "ranklab/rank/rank_table.hpp"

#include <cstdlib>
#include <string>

#include "ranklab/errors.hpp"

namespace ranklab::rank {

series::ZQSeries rank_generating_function(int order) {
  if (order < 0) throw DomainError("rank_generating_function: order must be >= 0");
  using series::ZQSeries;
  ZQSeries result = ZQSeries::one(order);
  // term = 1 / ((zq)_k (z^{-1}q)_k), kept at order N - k^2 since it is multiplied by q^{k^2}
  ZQSeries term = ZQSeries::one(order);
  for (int k = 1; k * k <= order; ++k) {
    const int reduced = order - k * k;
    term = term.truncated(reduced);
    term = series::zqs_div_factor(term, 1, k);
    term = series::zqs_div_factor(term, -1, k);
    result = result + term.q_lifted(order, k * k);
  }
  return result;
}

RankTable::RankTable(series::ZQSeries generating_function)
    : max_n_(generating_function.order()), gf_(std::move(generating_function)) {
  entries_.resize(static_cast<std::size_t>(max_n_) + 1);
  for (int n = 0; n <= max_n_; ++n) {
    auto& row = entries_[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) row[static_cast<std::size_t>(m)] = gf_.coeff(m, n);
  }
}

const Integer& RankTable::count(int m, int n) const {
  static const Integer kZero = 0;
  if (n < 0 || n > max_n_) throw UsageError("RankTable::count: n = " + std::to_string(n) + " outside table");
  const int a = std::abs(m);
  if (a > n) return kZero;
  return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)];
}

Integer RankTable::total(int n) const {
  Integer s = count(0, n);
  for (int m = 1; m <= n; ++m) s += 2 * count(m, n);
  return s;
}

RankTable rank_table(int n_max) { return RankTable(rank_generating_function(n_max)); }

RankModTable::RankModTable(int modulus, std::vector<std::vector<Integer>> entries)
    : modulus_(modulus), entries_(std::move(entries)) {
  if (modulus < 1) throw DomainError("RankModTable: modulus must be >= 1");
}

const Integer& RankModTable::count(int r, int n) const {
  if (n < 0 || n > max_n()) throw UsageError("RankModTable::count: n = " + std::to_string(n) + " outside table");
  const int rr = ((r % modulus_) + modulus_) % modulus_;
  return entries_[static_cast<std::size_t>(n)][static_cast<std::size_t>(rr)];
}

RankModTable rank_mod_table(const RankTable& table, int t) {
  if (t < 1) throw DomainError("rank_mod_table: t must be >= 1, got " + std::to_string(t));
  std::vector<std::vector<Integer>> entries(static_cast<std::size_t>(table.max_n()) + 1,
                                            std::vector<Integer>(static_cast<std::size_t>(t)));
  for (int n = 0; n <= table.max_n(); ++n) {
    for (int m = -n; m <= n; ++m) {
      const int r = ((m % t) + t) % t;
      entries[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] += table.count(m, n);
    }
  }
  return RankModTable(t, std::move(entries));
}

RankModTable rank_mod_table(int t, int n_max) { return rank_mod_table(rank_table(n_max), t); }

}  // namespace ranklab::rank
