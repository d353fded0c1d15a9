#pragma once

#include <cstdint>
#include <vector>

#include "netdim/graph.hpp"

namespace netdim {

struct VolumeOptions {
  /// Count the node's own degree in s_i(l) (distance 0 <= l).
  bool include_self = true;
};

/// Cumulative degree mass around one node: volumes[l - 1] is the total
/// degree of all nodes within distance l, for l = 1..eccentricity.
struct VolumeProfile {
  NodeId node = 0;
  std::vector<std::uint64_t> volumes;
  std::uint64_t total_degree = 0;

  std::size_t radius() const noexcept { return volumes.size(); }
};

/// Throws DegenerateError for an isolated node (eccentricity 0).
VolumeProfile volume_profile(const Graph& g, NodeId node, const VolumeOptions& options = {});

/// -p ln p with p = s / total; exactly 0 when s == total.
/// Throws DomainError unless 0 < s <= total.
double entropy_term(double s, double total);

enum class DimensionMethod { lvd, lvid };

struct DimensionOptions {
  bool include_self = true;
  /// Report the negated regression slope (the default reading). When false
  /// the raw slope is reported; ranking stays descending either way.
  bool negate_slope = true;
};

struct DimensionScore {
  NodeId node = 0;
  DimensionMethod method = DimensionMethod::lvid;
  /// NaN for degenerate nodes; rank_all substitutes a finite value.
  double score = 0.0;
  std::size_t points_used = 0;

  bool degenerate() const noexcept { return points_used < 2; }
};

/// Local volume dimension: regression of ln s_i(l) on ln l.
DimensionScore lvd_score(const Graph& g, NodeId node, const DimensionOptions& options = {});

/// Local volume information dimension: regression of the entropy term of
/// s_i(l) / S on ln l.
DimensionScore lvid_score(const Graph& g, NodeId node, const DimensionOptions& options = {});

DimensionScore dimension_score(const Graph& g, NodeId node, DimensionMethod method,
                               const DimensionOptions& options = {});

/// Scores for every node, one BFS per node, parallel over nodes.
std::vector<DimensionScore> dimension_scores(const Graph& g, DimensionMethod method,
                                             const DimensionOptions& options = {});

/// Replaces degenerate scores with (minimum finite score - 1) so that those
/// nodes rank last; if no node has a finite score every node gets 0.
std::vector<double> finalize_dimension_scores(const std::vector<DimensionScore>& scores);

namespace serial {

/// Single-threaded reference for netdim::dimension_scores.
std::vector<DimensionScore> dimension_scores(const Graph& g, DimensionMethod method,
                                             const DimensionOptions& options = {});

}  // namespace serial

}  // namespace netdim
