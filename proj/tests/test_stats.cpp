#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "netdim/errors.hpp"
#include "netdim/stats.hpp"
#include "support/oracles.hpp"

namespace netdim {
namespace {

TEST(KendallTau, IdentityReversalAndOneSwap) {
  const std::vector<double> x{1, 2, 3};
  EXPECT_DOUBLE_EQ(kendall_tau(x, x), 1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(x, std::vector<double>{3, 2, 1}), -1.0);
  // Pairs (1,2) and (1,3) concordant, (2,3) discordant.
  EXPECT_DOUBLE_EQ(kendall_tau(x, std::vector<double>{1, 3, 2}), 1.0 / 3.0);
}

TEST(KendallTau, TiesCountInNeitherClass) {
  // Two concordant pairs; the pair tied in y counts in neither class.
  const std::vector<double> x{1, 2, 3}, y{1, 1, 2};
  const auto c = kendall_pair_counts(x, y);
  EXPECT_EQ(c.concordant, 2u);
  EXPECT_EQ(c.discordant, 0u);
  EXPECT_EQ(c.tied_y, 1u);
  EXPECT_DOUBLE_EQ(kendall_tau(x, y), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(kendall_tau(x, y, TauVariant::b), 2.0 / std::sqrt(3.0 * 2.0));
}

TEST(KendallTau, RejectsBadInput) {
  const std::vector<double> one{1.0};
  EXPECT_THROW(kendall_tau(one, one), ArgumentError);
  EXPECT_THROW(kendall_tau(std::vector<double>{1, 2}, std::vector<double>{1, 2, 3}), ArgumentError);
  EXPECT_THROW(kendall_tau(std::vector<double>{1, NAN}, std::vector<double>{1, 2}), ArgumentError);
}

TEST(KendallTau, MergeCountsEqualQuadraticOracleExactly) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = trial < 50 ? 2 + trial : 2000;
    // Small value ranges force plenty of ties in both series.
    std::uniform_int_distribution<int> vx(0, trial % 3 == 0 ? 5 : 1000);
    std::uniform_int_distribution<int> vy(0, trial % 2 == 0 ? 4 : 1000);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = vx(rng);
      y[i] = vy(rng);
    }
    const auto fast = kendall_pair_counts(x, y);
    const auto slow = oracle::kendall_pairs_quadratic(x, y);
    ASSERT_EQ(fast.concordant, static_cast<std::uint64_t>(slow.concordant)) << "n=" << n;
    ASSERT_EQ(fast.discordant, static_cast<std::uint64_t>(slow.discordant)) << "n=" << n;
    EXPECT_EQ(kendall_tau(x, y), oracle::kendall_tau_quadratic(x, y));
  }
}

TEST(KendallTau, SymmetricBoundedAndMonotoneInvariant) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 40;
    std::vector<double> x(n), y(n), fx(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::round(normal(rng) * 3.0);
      y[i] = normal(rng) + 0.5 * x[i];
      fx[i] = std::exp(x[i]) + 7.0;
    }
    const double t = kendall_tau(x, y);
    EXPECT_GE(t, -1.0);
    EXPECT_LE(t, 1.0);
    EXPECT_EQ(t, kendall_tau(y, x));
    EXPECT_EQ(t, kendall_tau(fx, y));
  }
}

TEST(FitSlope, ExactLinesAndConstants) {
  const Point line[] = {{0, 0}, {1, 2}, {2, 4}};
  const auto a = fit_slope(line);
  EXPECT_DOUBLE_EQ(a.slope, 2.0);
  EXPECT_NEAR(a.intercept, 0.0, 1e-15);

  const Point flat[] = {{0, 1}, {1, 1}};
  const auto b = fit_slope(flat);
  EXPECT_DOUBLE_EQ(b.slope, 0.0);
  EXPECT_DOUBLE_EQ(b.intercept, 1.0);
}

TEST(FitSlope, StarLeafEntropyProfile) {
  // Entropy of 5/8 at l = 1 and 0 at l = 2.
  const double e = -0.625 * std::log(0.625);
  const Point pts[] = {{0.0, e}, {std::log(2.0), 0.0}};
  EXPECT_NEAR(fit_slope(pts).slope, -0.423795, 1e-6);
}

TEST(FitSlope, DegenerateInputs) {
  const Point one[] = {{1, 1}};
  EXPECT_THROW(fit_slope(one), DegenerateError);
  const Point vertical[] = {{2, 1}, {2, 5}, {2, 3}};
  EXPECT_THROW(fit_slope(vertical), DegenerateError);
}

TEST(FitSlope, RecoversAffineSlope) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double slope = u(rng), intercept = u(rng);
    std::vector<Point> pts;
    for (int i = 0; i < 2 + trial % 10; ++i) {
      const double x = std::log(1.0 + i);
      pts.push_back({x, slope * x + intercept});
    }
    const auto fit = fit_slope(pts);
    EXPECT_NEAR(fit.slope, slope, 1e-12);
    EXPECT_NEAR(fit.intercept, intercept, 1e-12);
  }
}

}  // namespace
}  // namespace netdim
