#include "netdim/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "netdim/errors.hpp"

namespace netdim {
namespace {

constexpr std::size_t kBetweennessBlocks = 64;

struct BrandesScratch {
  std::vector<Distance> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;

  explicit BrandesScratch(std::size_t n) : dist(n), sigma(n), delta(n) { order.reserve(n); }
};

// Adds the single-source dependencies of `source` into `acc`.
void accumulate_source(const Graph& g, NodeId source, BrandesScratch& s, std::vector<double>& acc) {
  std::fill(s.dist.begin(), s.dist.end(), kUnreachable);
  std::fill(s.sigma.begin(), s.sigma.end(), 0.0);
  std::fill(s.delta.begin(), s.delta.end(), 0.0);
  s.order.clear();

  s.dist[source] = 0;
  s.sigma[source] = 1.0;
  s.order.push_back(source);
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const NodeId u = s.order[head];
    for (NodeId v : g.neighbors(u)) {
      if (s.dist[v] == kUnreachable) {
        s.dist[v] = s.dist[u] + 1;
        s.order.push_back(v);
      }
      if (s.dist[v] == s.dist[u] + 1) s.sigma[v] += s.sigma[u];
    }
  }
  // Predecessors are recovered from distances rather than stored.
  for (auto it = s.order.rbegin(); it != s.order.rend(); ++it) {
    const NodeId w = *it;
    const double coeff = (1.0 + s.delta[w]) / s.sigma[w];
    for (NodeId v : g.neighbors(w)) {
      if (s.dist[v] + 1 == s.dist[w]) s.delta[v] += s.sigma[v] * coeff;
    }
    if (w != source) acc[w] += s.delta[w];
  }
}

CentralityScores finish_betweenness(std::vector<double> acc) {
  // Every unordered pair was visited from both ends.
  for (auto& v : acc) v *= 0.5;
  return make_scores(Method::betweenness, std::move(acc));
}

double gravity_of(const Graph& g, NodeId i, int radius, std::vector<Distance>& dist,
                  std::vector<NodeId>& order) {
  bfs_into(g, i, dist, order);
  const double ki = g.degree(i);
  double sum = 0.0;
  for (NodeId j : order) {
    const Distance d = dist[j];
    if (d == 0) continue;
    if (d > static_cast<Distance>(radius)) break;
    sum += ki * g.degree(j) / (static_cast<double>(d) * d);
  }
  return sum;
}

void check_radius(int radius) {
  if (radius < 1) throw ArgumentError("gravity radius must be >= 1, got " + std::to_string(radius));
}

}  // namespace

CentralityScores betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t blocks = std::min(kBetweennessBlocks, std::max<std::size_t>(n, 1));
  std::vector<std::vector<double>> partial(blocks);

#pragma omp parallel
  {
    BrandesScratch scratch(n);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const std::size_t begin = n * static_cast<std::size_t>(b) / blocks;
      const std::size_t end = n * (static_cast<std::size_t>(b) + 1) / blocks;
      std::vector<double> acc(n, 0.0);
      for (std::size_t src = begin; src < end; ++src) {
        accumulate_source(g, static_cast<NodeId>(src), scratch, acc);
      }
      partial[b] = std::move(acc);
    }
  }

  std::vector<double> total(n, 0.0);
  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) total[v] += acc[v];
  }
  return finish_betweenness(std::move(total));
}

CentralityScores serial::betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  BrandesScratch scratch(n);
  std::vector<double> acc(n, 0.0);
  for (NodeId src = 0; src < n; ++src) accumulate_source(g, src, scratch, acc);
  return finish_betweenness(std::move(acc));
}

CentralityScores pagerank(const Graph& g, const PageRankOptions& options) {
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw ArgumentError("pagerank damping must lie in (0, 1)");
  }
  const std::size_t n = g.node_count();
  if (n == 0) return make_scores(Method::pagerank, {});

  const double d = options.damping;
  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform), next(n), share(n);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double dangling = 0.0;
    for (NodeId u = 0; u < n; ++u) {
      const auto k = g.degree(u);
      if (k == 0) {
        dangling += rank[u];
        share[u] = 0.0;
      } else {
        share[u] = rank[u] / k;
      }
    }
    const double base = (1.0 - d) * uniform + d * dangling * uniform;
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      double inflow = 0.0;
      for (NodeId u : g.neighbors(v)) inflow += share[u];
      next[v] = base + d * inflow;
      change += std::abs(next[v] - rank[v]);
    }
    rank.swap(next);
    if (change < options.tolerance) return make_scores(Method::pagerank, std::move(rank));
  }
  throw ConvergenceError("pagerank did not converge within " +
                             std::to_string(options.max_iterations) + " iterations",
                         std::move(rank));
}

CentralityScores gravity(const Graph& g, int radius) {
  check_radius(radius);
  const auto n = static_cast<std::int64_t>(g.node_count());
  std::vector<double> scores(g.node_count());
#pragma omp parallel
  {
    std::vector<Distance> dist;
    std::vector<NodeId> order;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      scores[i] = gravity_of(g, static_cast<NodeId>(i), radius, dist, order);
    }
  }
  return make_scores(Method::gravity, std::move(scores));
}

CentralityScores serial::gravity(const Graph& g, int radius) {
  check_radius(radius);
  std::vector<Distance> dist;
  std::vector<NodeId> order;
  std::vector<double> scores(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) scores[i] = gravity_of(g, i, radius, dist, order);
  return make_scores(Method::gravity, std::move(scores));
}

CentralityScores degree_centrality(const Graph& g) {
  std::vector<double> scores(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) scores[v] = g.degree(v);
  return make_scores(Method::degree, std::move(scores));
}

}  // namespace netdim
