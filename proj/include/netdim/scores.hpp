#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netdim/graph.hpp"

namespace netdim {

enum class Method { degree, betweenness, pagerank, gravity, lvd, lvid };

inline constexpr Method kAllMethods[] = {Method::lvid,     Method::lvd,     Method::betweenness,
                                         Method::pagerank, Method::gravity, Method::degree};

std::string_view method_name(Method m);

/// Case-insensitive lookup of "lvid", "lvd", "betweenness"/"bc",
/// "pagerank"/"pr", "gravity", "degree". Throws ConfigError for anything
/// else; "gg" and "wg" get a message explaining why they are unavailable.
Method parse_method(std::string_view name);

/// Per-node scores plus the induced ranking (descending score, ties by
/// ascending node id).
struct CentralityScores {
  Method method = Method::degree;
  std::vector<double> scores;
  std::vector<NodeId> ranking;

  /// 1-based rank of every node.
  std::vector<std::size_t> ranks() const;
  std::vector<NodeId> top(std::size_t k) const;
};

/// Computes the ranking. Throws NumericalError if any score is non-finite.
CentralityScores make_scores(Method method, std::vector<double> scores);

std::vector<NodeId> rank_descending(const std::vector<double>& scores);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// CSV "node,label,score,rank", one row per node in rank order.
void write_scores_csv(std::ostream& out, const Graph& g, const CentralityScores& s);
void write_scores_json(std::ostream& out, const Graph& g, const CentralityScores& s);

}  // namespace netdim
