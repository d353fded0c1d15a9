#include "netdim/centrality.hpp"

namespace netdim {

CentralityScores rank_all(const Graph& g, Method method, const RankOptions& options) {
  switch (method) {
    case Method::degree: return degree_centrality(g);
    case Method::betweenness: return betweenness(g);
    case Method::pagerank: return pagerank(g, options.pagerank);
    case Method::gravity: return gravity(g, options.gravity_radius);
    case Method::lvd:
    case Method::lvid: {
      const auto kind = method == Method::lvd ? DimensionMethod::lvd : DimensionMethod::lvid;
      return make_scores(method,
                         finalize_dimension_scores(dimension_scores(g, kind, options.dimension)));
    }
  }
  return degree_centrality(g);
}

}  // namespace netdim
