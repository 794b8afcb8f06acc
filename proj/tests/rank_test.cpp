#include <map>
#include <set>

#include <gtest/gtest.h>

#include "ranklab/errors.hpp"
#include "ranklab/rank/checks.hpp"
#include "ranklab/rank/partitions.hpp"
#include "ranklab/rank/rank_table.hpp"

using namespace ranklab;
using namespace ranklab::rank;

namespace {

const RankTable& table300() {
  static const RankTable t = rank_table(300);
  return t;
}

// p(n) by the plain "largest part at most k" recursion; independent of the pentagonal recurrence
Integer p_by_parts(int n) {
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1);
  ways[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int s = k; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - k)];
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST(Partitions, SmallValues) {
  EXPECT_EQ(partition_count(0), 1);
  EXPECT_EQ(partition_count(5), 7);
  EXPECT_EQ(partition_count(100), Integer("190569292"));
  EXPECT_THROW(partition_count(-1), DomainError);
}

TEST(Partitions, AgreesWithPartsRecursion) {
  const auto p = partition_counts(400);
  for (int n : {0, 1, 7, 50, 123, 399, 400}) EXPECT_EQ(p[static_cast<std::size_t>(n)], p_by_parts(n)) << n;
}

TEST(BruteForce, SmallHistograms) {
  EXPECT_EQ(brute_force_rank_histogram(0), (std::map<int, Integer>{{0, 1}}));
  const std::map<int, Integer> five{{4, 1}, {2, 1}, {1, 1}, {0, 1}, {-1, 1}, {-2, 1}, {-4, 1}};
  EXPECT_EQ(brute_force_rank_histogram(5), five);
  Integer total = 0;
  for (const auto& [m, c] : brute_force_rank_histogram(20)) total += c;
  EXPECT_EQ(total, partition_count(20));
  EXPECT_THROW(brute_force_rank_histogram(61), UsageError);
  EXPECT_NO_THROW(brute_force_rank_histogram(10, 10));
}

TEST(RankTable, MatchesEnumerationUpTo40) {
  const RankTable t = rank_table(40);
  for (int n = 0; n <= 40; ++n) {
    const auto hist = brute_force_rank_histogram(n);
    for (int m = -n - 1; m <= n + 1; ++m) {
      const auto it = hist.find(m);
      EXPECT_EQ(t.count(m, n), it == hist.end() ? Integer(0) : it->second) << "m=" << m << " n=" << n;
    }
  }
}

TEST(RankTable, NamedValues) {
  const RankTable& t = table300();
  EXPECT_EQ(t.count(0, 0), 1);
  EXPECT_EQ(t.count(2, 4), 0);
  EXPECT_EQ(t.count(1, 7), 1);
  EXPECT_EQ(t.count(1, 6), 2);
  EXPECT_THROW(t.count(0, 301), UsageError);
}

TEST(RankTable, InvariantsTo300) {
  const RankTable& t = table300();
  const auto p = partition_counts(300);
  for (int n = 0; n <= 300; ++n) {
    EXPECT_EQ(t.total(n), p[static_cast<std::size_t>(n)]);
    if (n >= 1) {
      EXPECT_EQ(t.count(n, n), 0);
    }
    if (n >= 2) {
      EXPECT_EQ(t.count(n - 2, n), 0);
    }
  }
  const auto& gf = t.generating_function();
  for (int n = 0; n <= 300; ++n) {
    EXPECT_LE(gf.band(n), n);
    for (int m = 1; m <= n; ++m) EXPECT_EQ(gf.coeff(m, n), gf.coeff(-m, n));
  }
}

TEST(RankModTable, FoldExamples) {
  const RankTable& t = table300();
  const RankModTable t1 = rank_mod_table(t, 1);
  for (int n = 0; n <= 300; n += 37) EXPECT_EQ(t1.count(0, n), partition_count(n));
  const RankModTable t3 = rank_mod_table(t, 3);
  EXPECT_EQ(t3.count(0, 5), 1);
  EXPECT_EQ(t3.count(1, 5), 3);
  EXPECT_EQ(t3.count(2, 5), 3);
  EXPECT_EQ(t3.count(-1, 5), 3);
  EXPECT_THROW(rank_mod_table(t, 0), DomainError);
}

TEST(RankModTable, Conservation) {
  const RankTable t = rank_table(120);
  const auto p = partition_counts(120);
  for (int m = 1; m <= 12; ++m) {
    const RankModTable mod = rank_mod_table(t, m);
    for (int n = 0; n <= 120; ++n) {
      Integer s = 0;
      for (int r = 0; r < m; ++r) s += mod.count(r, n);
      EXPECT_EQ(s, p[static_cast<std::size_t>(n)]);
    }
  }
}

TEST(Monotonicity, WeakExceptionSetIsExact) {
  const auto found = check_weak_monotonicity(table300(), 100, 40);
  std::vector<std::pair<int, int>> cells;
  for (const auto& v : found) {
    cells.emplace_back(v.first, v.n);
    EXPECT_LT(v.lhs, v.rhs);
  }
  EXPECT_EQ(cells, expected_weak_exceptions(100, 40));
  const std::set<std::pair<int, int>> s(cells.begin(), cells.end());
  EXPECT_TRUE(s.count({1, 7}) && s.count({0, 8}) && s.count({3, 11}));
}

TEST(Monotonicity, WeakSmallWindowOnlyDiagonal) {
  for (const auto& v : check_weak_monotonicity(table300(), 6, 6)) EXPECT_EQ(v.n, v.first + 2);
  EXPECT_TRUE(check_weak_monotonicity(table300(), 0, 10).empty());
}

TEST(Monotonicity, StrictRegion) {
  EXPECT_TRUE(check_strict_monotonicity(table300(), 300).empty());
  EXPECT_TRUE(check_strict_monotonicity(table300(), 26).empty());
}

TEST(Monotonicity, N0Increment) {
  EXPECT_TRUE(check_N0_increment(table300(), 300).empty());
  const auto low = check_N0_increment(table300(), 8, 8);
  ASSERT_EQ(low.size(), 1u);
  EXPECT_EQ(low[0].n, 8);
  EXPECT_LT(table300().count(0, 8), table300().count(0, 7));
}

TEST(Monotonicity, RankModThreshold) {
  EXPECT_EQ(rank_mod_threshold(0, 2), 29);
  for (int t = 1; t <= 10; ++t) EXPECT_TRUE(check_rank_mod_monotonicity(table300(), t, 300).empty()) << t;
}

TEST(Lemmas, Postage) {
  const auto s = postage_series(40);
  EXPECT_EQ(s[18], 2);
  EXPECT_EQ(s[17], 1);  // 17 = 3*3 + 4*2 only
  EXPECT_EQ(s[1], 0);
  EXPECT_TRUE(verify_lemma_postage(500));
}

TEST(Lemmas, Nonneg) {
  EXPECT_TRUE(verify_lemma_nonneg(1, 50));
  EXPECT_EQ(lemma_nonneg_series(4, 10)[0], 1);
  for (int m = 1; m <= 30; ++m) EXPECT_TRUE(verify_lemma_nonneg(m, 200)) << m;
  EXPECT_THROW(lemma_nonneg_series(0, 10), DomainError);
}

TEST(Lemmas, FmkDisplays) {
  const Verdict v = verify_lemma_fmk(20, 15);
  EXPECT_TRUE(v) << (v.violations.empty() ? "" : v.violations[0].kind);
}

TEST(Lemmas, FmkDecomposition) {
  const Verdict v = verify_fmk_decomposition(25, 25);
  EXPECT_TRUE(v) << (v.violations.empty() ? "" : v.violations[0].kind);
}

TEST(Lemmas, GapSeriesPositivity) {
  const auto s = gap_series(60);
  EXPECT_LT(s[14], 0);
  const auto postage = postage_series(60);
  for (int n = 31; n <= 59; n += 2) EXPECT_EQ(s[n], postage[n - 12]);
  EXPECT_TRUE(verify_gap_series_positivity(500));
}

TEST(GeneratingIdentity, ReconstructsFold) {
  for (int t = 2; t <= 7; ++t) {
    const auto d = verify_generating_identity(table300(), t, 60, 1e-9);
    EXPECT_TRUE(d.passed()) << "t=" << t << " dev=" << d.max_abs_deviation;
    EXPECT_LT(d.max_imag, 1e-9);
    EXPECT_LT(d.max_form_gap, 1e-9);
  }
  const auto one = verify_generating_identity(table300(), 1, 60, 1e-9);
  EXPECT_EQ(one.max_abs_deviation, 0);
}
