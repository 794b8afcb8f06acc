#include <random>

#include <gtest/gtest.h>

#include "ranklab/errors.hpp"
#include "ranklab/rank/partitions.hpp"
#include "ranklab/rank/rank_table.hpp"
#include "ranklab/series/qseries.hpp"
#include "ranklab/series/zqseries.hpp"

using namespace ranklab;
using series::Integer;
using series::QSeries;
using series::ZQSeries;

namespace {

QSeries poly(int order, std::vector<long> c) {
  std::vector<Integer> v(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < c.size() && i < v.size(); ++i) v[i] = c[i];
  return QSeries(order, std::move(v));
}

QSeries random_qs(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> d(-50, 50);
  std::vector<long> c(static_cast<std::size_t>(order) + 1);
  for (auto& x : c) x = d(rng);
  return poly(order, c);
}

ZQSeries random_zqs(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<ZQSeries::Term> terms;
  for (int n = 0; n <= order; ++n) {
    std::uniform_int_distribution<int> band(-n - 1, n + 1);
    for (int k = 0; k < 3; ++k) terms.push_back({band(rng), n, coef(rng)});
  }
  return ZQSeries::from_terms(order, terms);
}

}  // namespace

TEST(QSeries, DifferenceOfSquares) {
  EXPECT_EQ(series::qs_mul(poly(2, {1, 1}), poly(2, {1, -1})), poly(2, {1, 0, -1}));
}

TEST(QSeries, OneIsIdentity) {
  const QSeries a = poly(5, {3, -1, 4, 1, -5, 9});
  EXPECT_EQ(a * QSeries::one(5), a);
}

TEST(QSeries, GeometricSquared) {
  const QSeries g = QSeries::geometric(4, 1);
  EXPECT_EQ(g * g, poly(4, {1, 2, 3, 4, 5}));
}

TEST(QSeries, MismatchedOrdersRejected) {
  EXPECT_THROW(QSeries::one(3) * QSeries::one(4), UsageError);
  EXPECT_THROW(QSeries::one(3) + QSeries::one(4), UsageError);
  EXPECT_THROW(QSeries(3, std::vector<Integer>(3)), UsageError);
}

TEST(QSeries, InvertGeometric) {
  EXPECT_EQ(series::qs_invert(poly(6, {1, -1})), QSeries::geometric(6, 1));
  EXPECT_EQ(series::qs_invert(QSeries::one(6)), QSeries::one(6));
  EXPECT_EQ(series::qs_invert(poly(3, {-1})), poly(3, {-1}));
  EXPECT_THROW(series::qs_invert(poly(3, {2, 1})), DomainError);
}

TEST(QSeries, InvertAgainstLatticeCount) {
  const int n = 12;
  const QSeries inv = series::qs_invert(poly(n, {1, 0, -1}) * poly(n, {1, 0, 0, -1}));
  for (int k = 0; k <= n; ++k) {
    int count = 0;
    for (int a = 0; 2 * a <= k; ++a) count += (k - 2 * a) % 3 == 0;
    EXPECT_EQ(inv[k], count) << "k=" << k;
  }
  EXPECT_EQ(inv[12], 3);
}

TEST(QSeries, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = static_cast<int>(rng() % 31);
    const QSeries a = random_qs(rng, order), b = random_qs(rng, order), c = random_qs(rng, order);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, QSeries(order));
  }
}

TEST(QSeries, EulerProductInvertsToPartitions) {
  const QSeries p = series::qs_invert(series::euler_product(100));
  EXPECT_EQ(p[100], Integer("190569292"));
  EXPECT_EQ(p[5], 7);
}

TEST(ZQSeries, InvertFactorIsGeometric) {
  const ZQSeries g = series::zqs_invert_factor(1, 1, 3);
  ZQSeries expect = ZQSeries::from_terms(3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}});
  EXPECT_EQ(g, expect);
  EXPECT_EQ(g.band(3), 3);
  EXPECT_THROW(series::zqs_invert_factor(1, 0, 3), DomainError);
  EXPECT_THROW(series::zqs_invert_factor(2, 1, 3), UsageError);
}

TEST(ZQSeries, FactorRoundTrip) {
  std::mt19937_64 rng(3);
  for (int s = -1; s <= 1; ++s) {
    for (int j = 1; j <= 3; ++j) {
      const ZQSeries x = random_zqs(rng, 12);
      const ZQSeries slow = series::zqs_mul(x, series::zqs_invert_factor(s, j, 12));
      EXPECT_EQ(series::zqs_mul_factor(slow, s, j), x);
      EXPECT_EQ(series::zqs_div_factor(x, s, j), slow);
    }
  }
}

TEST(ZQSeries, RingAxioms) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 20);
    const ZQSeries a = random_zqs(rng, order), b = random_zqs(rng, order), c = random_zqs(rng, order);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(ZQSeries, MismatchedOrdersRejected) {
  EXPECT_THROW(ZQSeries::one(2) * ZQSeries::one(3), UsageError);
  EXPECT_THROW(ZQSeries::one(2) - ZQSeries::one(3), UsageError);
}

TEST(ZQSeries, LemmaFirstDisplayAtFour) {
  const int n = 4;
  ZQSeries lhs = ZQSeries::one(n) - ZQSeries::monomial(n, 0, 1);
  lhs = lhs * series::zqs_invert_factor(1, 1, n) * series::zqs_invert_factor(-1, 1, n);
  for (int q = 0; q <= n; ++q) {
    for (int m = -n - 1; m <= n + 1; ++m) {
      const int expect = std::abs(m) <= q ? ((m + q) % 2 == 0 ? 1 : -1) : 0;
      EXPECT_EQ(lhs.coeff(m, q), expect) << m << "," << q;
    }
  }
  // z-free part by hand: 1, -1, 1, -1, 1
  EXPECT_EQ(lhs.z_coefficient(0), poly(n, {1, -1, 1, -1, 1}));
}

TEST(ZQSeries, EvalAtOneGivesPartitionCounts) {
  const ZQSeries r = rank::rank_generating_function(60);
  const auto values = series::zqs_eval_root_of_unity(r, 0, 1, 30);
  const auto p = rank::partition_counts(60);
  for (int n = 0; n <= 60; ++n) {
    EXPECT_EQ(numeric::from_mpz(p[static_cast<std::size_t>(n)]), values[static_cast<std::size_t>(n)].re);
    EXPECT_EQ(values[static_cast<std::size_t>(n)].im, 0);
  }
}

TEST(ZQSeries, EvalAtMinusOneIsMockThetaF) {
  const ZQSeries r = rank::rank_generating_function(5);
  const auto v = series::zqs_eval_root_of_unity(r, 1, 2, 30);
  // alternating sums of the enumerated histograms
  const long f[] = {1, 1, -2, 3, -3, 3};
  for (int n = 0; n <= 5; ++n) {
    EXPECT_NEAR(numeric::to_double(v[static_cast<std::size_t>(n)].re), static_cast<double>(f[n]), 1e-25);
  }
}

TEST(ZQSeries, EvalConjugateRoots) {
  const ZQSeries r = rank::rank_generating_function(40);
  const auto a = series::zqs_eval_root_of_unity(r, 2, 7, 30);
  const auto b = series::zqs_eval_root_of_unity(r, 5, 7, 30);
  for (std::size_t n = 0; n < a.size(); ++n) {
    EXPECT_LT(numeric::to_double(numeric::abs(a[n] - numeric::conj(b[n]))), 1e-20);
  }
  EXPECT_THROW(series::zqs_eval_root_of_unity(r, 7, 7, 30), UsageError);
  EXPECT_THROW(series::zqs_eval_root_of_unity(r, 0, 0, 30), DomainError);
}
