#include "netdim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "netdim/errors.hpp"

namespace netdim {
namespace {

std::uint64_t pairs_of(std::uint64_t run) { return run * (run - 1) / 2; }

// Sum of C(run, 2) over runs of equal adjacent values.
template <typename Eq>
std::uint64_t tied_pairs(std::size_t n, Eq equal) {
  std::uint64_t total = 0;
  std::uint64_t run = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (equal(i - 1, i)) {
      ++run;
    } else {
      total += pairs_of(run);
      run = 1;
    }
  }
  return total + pairs_of(run);
}

// Bottom-up merge sort of `values`; returns the number of strict inversions.
std::uint64_t sort_counting_inversions(std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<double> buffer(n);
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < n; width *= 2) {
    for (std::size_t lo = 0; lo < n; lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, n);
      const std::size_t hi = std::min(lo + 2 * width, n);
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (values[j] < values[i]) {
          inversions += mid - i;
          buffer[k++] = values[j++];
        } else {
          buffer[k++] = values[i++];
        }
      }
      while (i < mid) buffer[k++] = values[i++];
      while (j < hi) buffer[k++] = values[j++];
    }
    values.swap(buffer);
  }
  return inversions;
}

}  // namespace

PairCounts kendall_pair_counts(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ArgumentError("kendall_tau: series lengths differ (" + std::to_string(x.size()) +
                        " vs " + std::to_string(y.size()) + ")");
  }
  const std::size_t n = x.size();
  if (n < 2) throw ArgumentError("kendall_tau: need at least two observations");
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!std::all_of(x.begin(), x.end(), finite) || !std::all_of(y.begin(), y.end(), finite)) {
    throw ArgumentError("kendall_tau: non-finite value in input");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });

  PairCounts c;
  c.total = pairs_of(n);
  c.tied_x = tied_pairs(n, [&](std::size_t i, std::size_t j) { return x[order[i]] == x[order[j]]; });
  c.tied_xy = tied_pairs(n, [&](std::size_t i, std::size_t j) {
    return x[order[i]] == x[order[j]] && y[order[i]] == y[order[j]];
  });

  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  // Within an x-tie block ys is ascending, so every inversion is a genuinely
  // discordant pair.
  c.discordant = sort_counting_inversions(ys);
  c.tied_y = tied_pairs(n, [&](std::size_t i, std::size_t j) { return ys[i] == ys[j]; });
  c.concordant = c.total - c.tied_x - c.tied_y + c.tied_xy - c.discordant;
  return c;
}

double tau_from_counts(const PairCounts& c, TauVariant variant) {
  const double diff = static_cast<double>(c.concordant) - static_cast<double>(c.discordant);
  if (variant == TauVariant::a) return diff / static_cast<double>(c.total);
  const double denom = std::sqrt(static_cast<double>(c.total - c.tied_x) *
                                 static_cast<double>(c.total - c.tied_y));
  return denom == 0.0 ? 0.0 : diff / denom;
}

double kendall_tau(std::span<const double> x, std::span<const double> y, TauVariant variant) {
  return tau_from_counts(kendall_pair_counts(x, y), variant);
}

LineFit fit_slope(std::span<const Point> points) {
  if (points.size() < 2) throw DegenerateError("regression needs at least two points");
  const double n = static_cast<double>(points.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    const double dx = p.x - mean_x;
    sxx += dx * dx;
    sxy += dx * (p.y - mean_y);
  }
  if (sxx == 0.0) throw DegenerateError("regression x values have zero variance");
  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x};
}

}  // namespace netdim
