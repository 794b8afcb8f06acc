#include "ranklab/rank/partitions.hpp"

#include <string>

#include "ranklab/errors.hpp"

namespace ranklab::rank {

std::vector<Integer> partition_counts(int n_max) {
  if (n_max < 0) throw DomainError("partition_counts: n must be >= 0");
  std::vector<Integer> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Integer acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      const bool plus = (k % 2) == 1;
      if (plus) {
        acc += p[static_cast<std::size_t>(n - g1)];
      } else {
        acc -= p[static_cast<std::size_t>(n - g1)];
      }
      if (g2 <= n) {
        if (plus) {
          acc += p[static_cast<std::size_t>(n - g2)];
        } else {
          acc -= p[static_cast<std::size_t>(n - g2)];
        }
      }
    }
    p[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return p;
}

Integer partition_count(int n) {
  if (n < 0) throw DomainError("partition_count: n must be >= 0, got " + std::to_string(n));
  return partition_counts(n).back();
}

std::map<int, Integer> brute_force_rank_histogram(int n, int oracle_limit) {
  if (n < 0) throw DomainError("brute_force_rank_histogram: n must be >= 0");
  if (n > oracle_limit) {
    throw UsageError("brute_force_rank_histogram: n = " + std::to_string(n) + " exceeds the oracle limit " +
                     std::to_string(oracle_limit));
  }
  std::map<int, Integer> hist;
  if (n == 0) {
    hist[0] = 1;
    return hist;
  }
  // parts[0..len) is the current partition, weakly decreasing
  std::vector<int> parts{n};
  while (true) {
    const int rank = parts.front() - static_cast<int>(parts.size());
    hist[rank] += 1;
    // next partition in decreasing lexicographic order
    int ones = 0;
    while (!parts.empty() && parts.back() == 1) {
      parts.pop_back();
      ++ones;
    }
    if (parts.empty()) break;
    const int k = parts.back() - 1;
    parts.back() = k;
    int rest = ones + 1;
    while (rest > k) {
      parts.push_back(k);
      rest -= k;
    }
    if (rest > 0) parts.push_back(rest);
  }
  return hist;
}

}  // namespace ranklab::rank
