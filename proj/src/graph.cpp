#include "netdim/graph.hpp"

#include <algorithm>

#include "netdim/errors.hpp"

namespace netdim {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw ArgumentError("label count " + std::to_string(labels.size()) +
                        " does not match node count " + std::to_string(node_count));
  }
  if (node_count >= kNoNode) {
    throw ArgumentError("node count exceeds the id range");
  }

  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw ArgumentError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") references a node outside 0.." + std::to_string(node_count));
    }
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (const auto& arc : arcs) ++g.offsets_[arc.first + 1];
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.reserve(arcs.size());
  for (const auto& arc : arcs) g.targets_.push_back(arc.second);
  g.labels_ = std::move(labels);
  return g;
}

std::vector<std::uint32_t> Graph::degrees() const {
  std::vector<std::uint32_t> out(node_count());
  for (NodeId v = 0; v < out.size(); ++v) out[v] = degree(v);
  return out;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::string Graph::label(NodeId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void bfs_into(const Graph& g, NodeId source, std::vector<Distance>& dist,
              std::vector<NodeId>& order) {
  if (!g.contains(source)) {
    throw ArgumentError("source " + std::to_string(source) + " out of range");
  }
  dist.assign(g.node_count(), kUnreachable);
  order.clear();
  order.reserve(g.node_count());
  dist[source] = 0;
  order.push_back(source);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId u = order[head];
    const Distance next = dist[u] + 1;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = next;
        order.push_back(v);
      }
    }
  }
}

DistanceField bfs_distances(const Graph& g, NodeId source) {
  DistanceField field;
  field.source = source;
  std::vector<NodeId> order;
  bfs_into(g, source, field.dist, order);
  return field;
}

Distance eccentricity(const Graph& g, NodeId node) {
  std::vector<Distance> dist;
  std::vector<NodeId> order;
  bfs_into(g, node, dist, order);
  // BFS order is nondecreasing in distance.
  return dist[order.back()];
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr std::uint32_t kUnset = kNoNode;
  std::vector<std::uint32_t> comp(g.node_count(), kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (comp[root] != kUnset) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : g.neighbors(u)) {
        if (comp[v] == kUnset) {
          comp[v] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  const auto comp = component_labels(g);
  return std::all_of(comp.begin(), comp.end(), [](auto c) { return c == 0; });
}

ComponentExtraction largest_component(const Graph& g) {
  if (g.empty()) throw EmptyGraphError("cannot extract a component from an empty graph");

  const auto comp = component_labels(g);
  std::vector<std::size_t> sizes;
  for (auto c : comp) {
    if (c >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  // Components are numbered by smallest member, so the first maximum wins ties.
  const auto best = static_cast<std::uint32_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

  ComponentExtraction out;
  out.old_to_new.assign(g.node_count(), kNoNode);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (comp[v] == best) {
      out.old_to_new[v] = static_cast<NodeId>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (comp[u] == best) edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(out.new_to_old.size());
    for (NodeId old : out.new_to_old) labels.push_back(g.labels()[old]);
  }
  out.graph = Graph::from_edges(out.new_to_old.size(), edges, std::move(labels));
  return out;
}

}  // namespace netdim
