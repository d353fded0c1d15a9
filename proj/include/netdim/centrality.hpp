#pragma once

#include "netdim/baselines.hpp"
#include "netdim/dimension.hpp"
#include "netdim/graph.hpp"
#include "netdim/scores.hpp"

namespace netdim {

struct RankOptions {
  DimensionOptions dimension;
  PageRankOptions pagerank;
  int gravity_radius = 3;
};

/// Scores every node with `method` and ranks them (descending, ties by id).
CentralityScores rank_all(const Graph& g, Method method, const RankOptions& options = {});

}  // namespace netdim
