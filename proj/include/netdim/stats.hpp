#pragma once

#include <cstdint>
#include <span>

namespace netdim {

/// Pair classification underlying Kendall's tau. Every one of the
/// n(n-1)/2 index pairs lands in exactly one of concordant, discordant,
/// or tied (tied in x, in y, or both).
struct PairCounts {
  std::uint64_t total = 0;
  std::uint64_t concordant = 0;
  std::uint64_t discordant = 0;
  std::uint64_t tied_x = 0;   ///< pairs with x_i == x_j (including joint ties)
  std::uint64_t tied_y = 0;   ///< pairs with y_i == y_j (including joint ties)
  std::uint64_t tied_xy = 0;  ///< pairs tied in both

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

enum class TauVariant {
  /// 2(n_c - n_d) / (n(n-1)); ties shrink |tau|.
  a,
  /// Tie-corrected denominator sqrt((n0 - n1)(n0 - n2)).
  b,
};

/// O(n log n) pair classification (sort by x, merge-count inversions in y).
/// Throws ArgumentError on length mismatch, n < 2, or non-finite input.
PairCounts kendall_pair_counts(std::span<const double> x, std::span<const double> y);

double kendall_tau(std::span<const double> x, std::span<const double> y,
                   TauVariant variant = TauVariant::a);

double tau_from_counts(const PairCounts& counts, TauVariant variant = TauVariant::a);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y ~ slope * x + intercept.
/// Throws DegenerateError for fewer than two points or zero x-variance.
LineFit fit_slope(std::span<const Point> points);

}  // namespace netdim
