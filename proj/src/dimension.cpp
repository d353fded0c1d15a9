#include "netdim/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netdim/errors.hpp"
#include "netdim/stats.hpp"

namespace netdim {
namespace {

struct Scratch {
  std::vector<Distance> dist;
  std::vector<NodeId> order;
  std::vector<Point> points;
};

// volumes[l - 1] = degree mass within distance l, for l = 1..eccentricity.
void fill_volumes(const Graph& g, NodeId node, bool include_self, Scratch& scratch,
                  std::vector<std::uint64_t>& volumes) {
  bfs_into(g, node, scratch.dist, scratch.order);
  const Distance radius = scratch.dist[scratch.order.back()];
  volumes.assign(radius, 0);
  std::uint64_t self_mass = 0;
  for (NodeId v : scratch.order) {
    const Distance d = scratch.dist[v];
    if (d == 0) {
      self_mass = include_self ? g.degree(v) : 0;
    } else {
      volumes[d - 1] += g.degree(v);
    }
  }
  std::uint64_t running = self_mass;
  for (auto& shell : volumes) {
    running += shell;
    shell = running;
  }
}

DimensionScore score_node(const Graph& g, NodeId node, DimensionMethod method,
                          const DimensionOptions& options, Scratch& scratch,
                          std::vector<std::uint64_t>& volumes) {
  fill_volumes(g, node, options.include_self, scratch, volumes);

  DimensionScore out;
  out.node = node;
  out.method = method;
  out.points_used = volumes.size();
  if (volumes.size() < 2) {
    out.score = std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  const double total = static_cast<double>(g.total_degree());
  scratch.points.clear();
  for (std::size_t l = 1; l <= volumes.size(); ++l) {
    const double s = static_cast<double>(volumes[l - 1]);
    const double y = method == DimensionMethod::lvd ? std::log(s) : entropy_term(s, total);
    scratch.points.push_back({std::log(static_cast<double>(l)), y});
  }
  const double slope = fit_slope(scratch.points).slope;
  out.score = options.negate_slope ? -slope : slope;
  return out;
}

}  // namespace

VolumeProfile volume_profile(const Graph& g, NodeId node, const VolumeOptions& options) {
  if (!g.contains(node)) throw ArgumentError("node " + std::to_string(node) + " out of range");
  if (g.degree(node) == 0) {
    throw DegenerateError("node " + std::to_string(node) + " is isolated; its volume profile is empty");
  }
  Scratch scratch;
  VolumeProfile out;
  out.node = node;
  out.total_degree = g.total_degree();
  fill_volumes(g, node, options.include_self, scratch, out.volumes);
  return out;
}

double entropy_term(double s, double total) {
  if (!(s > 0.0) || !(s <= total) || !std::isfinite(total)) {
    throw DomainError("entropy term needs 0 < s <= S (got s = " + std::to_string(s) +
                      ", S = " + std::to_string(total) + ")");
  }
  if (s == total) return 0.0;
  const double p = s / total;
  return -p * std::log(p);
}

DimensionScore dimension_score(const Graph& g, NodeId node, DimensionMethod method,
                               const DimensionOptions& options) {
  if (!g.contains(node)) throw ArgumentError("node " + std::to_string(node) + " out of range");
  Scratch scratch;
  std::vector<std::uint64_t> volumes;
  return score_node(g, node, method, options, scratch, volumes);
}

DimensionScore lvd_score(const Graph& g, NodeId node, const DimensionOptions& options) {
  return dimension_score(g, node, DimensionMethod::lvd, options);
}

DimensionScore lvid_score(const Graph& g, NodeId node, const DimensionOptions& options) {
  return dimension_score(g, node, DimensionMethod::lvid, options);
}

std::vector<DimensionScore> dimension_scores(const Graph& g, DimensionMethod method,
                                             const DimensionOptions& options) {
  const auto n = static_cast<std::int64_t>(g.node_count());
  std::vector<DimensionScore> out(g.node_count());
#pragma omp parallel
  {
    Scratch scratch;
    std::vector<std::uint64_t> volumes;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < n; ++v) {
      out[v] = score_node(g, static_cast<NodeId>(v), method, options, scratch, volumes);
    }
  }
  return out;
}

std::vector<DimensionScore> serial::dimension_scores(const Graph& g, DimensionMethod method,
                                                     const DimensionOptions& options) {
  Scratch scratch;
  std::vector<std::uint64_t> volumes;
  std::vector<DimensionScore> out;
  out.reserve(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.push_back(score_node(g, v, method, options, scratch, volumes));
  }
  return out;
}

std::vector<double> finalize_dimension_scores(const std::vector<DimensionScore>& scores) {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& s : scores) {
    if (!s.degenerate()) lowest = std::min(lowest, s.score);
  }
  const double fallback = std::isfinite(lowest) ? lowest - 1.0 : 0.0;
  std::vector<double> out;
  out.reserve(scores.size());
  for (const auto& s : scores) out.push_back(s.degenerate() ? fallback : s.score);
  return out;
}

}  // namespace netdim
