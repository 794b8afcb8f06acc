#pragma once

#include <map>
#include <vector>

#include "ranklab/series/qseries.hpp"

namespace ranklab::rank {

using series::Integer;

/// p(n) by Euler's pentagonal recurrence.
Integer partition_count(int n);

/// p(0), ..., p(n_max).
std::vector<Integer> partition_counts(int n_max);

inline constexpr int kDefaultOracleLimit = 60;

/// Histogram rank -> count over every partition of n, by direct enumeration
/// in decreasing lexicographic order. Independent of the series machinery;
/// used as an oracle. Refuses n above `oracle_limit`.
std::map<int, Integer> brute_force_rank_histogram(int n, int oracle_limit = kDefaultOracleLimit);

}  // namespace ranklab::rank
