#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netdim {

using NodeId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Node ids are 0..node_count()-1. Neighbor lists are sorted and contain
/// neither self-loops nor duplicates; adjacency is symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph from an arbitrary edge list. Self-loops and
  /// parallel edges are discarded; (u, v) and (v, u) are the same edge.
  /// Throws ArgumentError if an endpoint is >= node_count or if `labels`
  /// is non-empty with a size other than node_count.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(NodeId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  std::vector<std::uint32_t> degrees() const;

  /// Sum of all degrees, S = 2 * edge_count.
  std::uint64_t total_degree() const noexcept { return targets_.size(); }

  bool has_edge(NodeId u, NodeId v) const;
  bool contains(NodeId v) const noexcept { return v < node_count(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Original label if one was recorded, otherwise the decimal id.
  std::string label(NodeId v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::string> labels_;
};

/// Unweighted shortest-path distances from one source.
struct DistanceField {
  NodeId source = 0;
  std::vector<Distance> dist;

  bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
};

DistanceField bfs_distances(const Graph& g, NodeId source);

/// BFS into caller-owned scratch. `dist` is resized to node_count and
/// overwritten; `order` receives the visited nodes in nondecreasing distance.
void bfs_into(const Graph& g, NodeId source, std::vector<Distance>& dist,
              std::vector<NodeId>& order);

/// Largest finite distance from `node`; 0 for an isolated node.
Distance eccentricity(const Graph& g, NodeId node);

/// Component index per node. Components are numbered in order of their
/// smallest member id.
std::vector<std::uint32_t> component_labels(const Graph& g);

struct ComponentExtraction {
  Graph graph;
  /// old id -> new id, kNoNode for nodes outside the component.
  std::vector<NodeId> old_to_new;
  /// new id -> old id.
  std::vector<NodeId> new_to_old;
};

/// Induced subgraph on the largest connected component with dense ids that
/// preserve the original relative order. Ties go to the component holding
/// the smallest original id. Throws EmptyGraphError on an empty graph.
ComponentExtraction largest_component(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace netdim
