#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

namespace netdim::oracle {
namespace {

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Sum of degrees of nodes within distance l of `node`, l = 1..ecc.
std::vector<double> naive_volumes(const Graph& g, NodeId node, bool include_self) {
  const auto d = floyd_warshall(g);
  const auto a = adjacency_matrix(g);
  const std::size_t n = g.node_count();
  std::vector<int> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) deg[i] += a[i][j] ? 1 : 0;
  }
  int ecc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (d[node][j] < kInf) ecc = std::max(ecc, d[node][j]);
  }
  std::vector<double> volumes;
  for (int l = 1; l <= ecc; ++l) {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == node && !include_self) continue;
      if (d[node][j] <= l) s += deg[j];
    }
    volumes.push_back(s);
  }
  return volumes;
}

// Slope via normal equations: (n Sxy - Sx Sy) / (n Sxx - Sx^2).
double normal_equation_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double naive_dimension(const Graph& g, NodeId node, bool include_self, bool entropy) {
  const auto volumes = naive_volumes(g, node, include_self);
  if (volumes.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double total = 2.0 * static_cast<double>(g.edge_count());
  std::vector<double> xs, ys;
  for (std::size_t l = 1; l <= volumes.size(); ++l) {
    xs.push_back(std::log(static_cast<double>(l)));
    const double p = volumes[l - 1] / total;
    ys.push_back(entropy ? (p == 1.0 ? 0.0 : -p * std::log(p)) : std::log(volumes[l - 1]));
  }
  return -normal_equation_slope(xs, ys);
}

}  // namespace

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency_matrix(g);
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

std::vector<double> betweenness_by_enumeration(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto a = adjacency_matrix(g);
  const auto d = floyd_warshall(g);
  std::vector<double> bc(n, 0.0);

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (d[s][t] >= kInf) continue;
      std::vector<std::vector<std::size_t>> paths;
      std::vector<std::size_t> path{s};
      std::vector<bool> on_path(n, false);
      on_path[s] = true;
      std::function<void(std::size_t)> dfs = [&](std::size_t u) {
        if (u == t) {
          if (static_cast<int>(path.size()) - 1 == d[s][t]) paths.push_back(path);
          return;
        }
        if (static_cast<int>(path.size()) - 1 >= d[s][t]) return;
        for (std::size_t v = 0; v < n; ++v) {
          if (!a[u][v] || on_path[v]) continue;
          on_path[v] = true;
          path.push_back(v);
          dfs(v);
          path.pop_back();
          on_path[v] = false;
        }
      };
      dfs(s);
      for (const auto& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) bc[p[i]] += 1.0 / paths.size();
      }
    }
  }
  return bc;
}

double naive_lvd(const Graph& g, NodeId node, bool include_self) {
  return naive_dimension(g, node, include_self, false);
}

double naive_lvid(const Graph& g, NodeId node, bool include_self) {
  return naive_dimension(g, node, include_self, true);
}

NaivePairs kendall_pairs_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  NaivePairs out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if ((x[i] < x[j] && y[i] < y[j]) || (x[i] > x[j] && y[i] > y[j])) ++out.concordant;
      if ((x[i] < x[j] && y[i] > y[j]) || (x[i] > x[j] && y[i] < y[j])) ++out.discordant;
    }
  }
  return out;
}

double kendall_tau_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  const auto p = kendall_pairs_quadratic(x, y);
  const double n = static_cast<double>(x.size());
  return 2.0 * static_cast<double>(p.concordant - p.discordant) / (n * (n - 1.0));
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    edges.emplace_back(perm[i], perm[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph preferential_attachment_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u <= m; ++u) {
    for (NodeId v = u + 1; v <= m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  for (NodeId u = static_cast<NodeId>(m + 1); u < n; ++u) {
    std::vector<NodeId> targets;
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < m) {
      const NodeId v = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), v) == targets.end()) targets.push_back(v);
    }
    for (NodeId v : targets) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i < n; ++i) edges.emplace_back(i - 1, i);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

std::vector<int> sir_step_by_step(const Graph& g, const std::vector<NodeId>& seeds, double beta,
                                  double gamma, int steps, std::mt19937_64& rng) {
  enum State : char { S, I, R };
  const std::size_t n = g.node_count();
  const auto a = adjacency_matrix(g);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<State> state(n, S);
  for (NodeId s : seeds) state[s] = I;

  auto affected = [&] {
    return static_cast<int>(std::count_if(state.begin(), state.end(), [](State x) { return x != S; }));
  };
  std::vector<int> out{affected()};
  for (int t = 1; t <= steps; ++t) {
    std::vector<State> next = state;
    for (std::size_t u = 0; u < n; ++u) {
      if (state[u] != I) continue;
      for (std::size_t v = 0; v < n; ++v) {
        if (a[u][v] && state[v] == S && unif(rng) < beta) next[v] = I;
      }
    }
    // Only nodes infectious at the start of the step may recover.
    for (std::size_t u = 0; u < n; ++u) {
      if (state[u] == I && unif(rng) < gamma) next[u] = R;
    }
    state = std::move(next);
    out.push_back(affected());
  }
  return out;
}

}  // namespace netdim::oracle
