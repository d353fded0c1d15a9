#pragma once

#include "netdim/graph.hpp"
#include "netdim/scores.hpp"

namespace netdim {

/// Unnormalized shortest-path betweenness (Brandes). Each unordered
/// source/target pair contributes once; endpoints are excluded.
///
/// Sources are split into a fixed number of contiguous blocks, each
/// accumulated serially and merged in block order, so the result does not
/// depend on the OpenMP thread count.
CentralityScores betweenness(const Graph& g);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-10;
  int max_iterations = 200;
};

/// Power iteration for the random walk on the undirected graph with uniform
/// teleportation; mass from isolated nodes is redistributed uniformly.
/// Throws ArgumentError for damping outside (0, 1) and ConvergenceError
/// (carrying the last iterate) if the L1 change never drops below tolerance.
CentralityScores pagerank(const Graph& g, const PageRankOptions& options = {});

/// Classic gravity centrality: sum over j != i with d_ij <= radius of
/// k_i * k_j / d_ij^2. Throws ArgumentError for radius < 1.
CentralityScores gravity(const Graph& g, int radius = 3);

CentralityScores degree_centrality(const Graph& g);

namespace serial {

/// Single-threaded Brandes over all sources in id order.
CentralityScores betweenness(const Graph& g);

CentralityScores gravity(const Graph& g, int radius = 3);

}  // namespace serial

}  // namespace netdim
