#include "netdim/scores.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "netdim/errors.hpp"

namespace netdim {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::degree: return "degree";
    case Method::betweenness: return "betweenness";
    case Method::pagerank: return "pagerank";
    case Method::gravity: return "gravity";
    case Method::lvd: return "lvd";
    case Method::lvid: return "lvid";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "lvid") return Method::lvid;
  if (key == "lvd") return Method::lvd;
  if (key == "betweenness" || key == "bc") return Method::betweenness;
  if (key == "pagerank" || key == "pr") return Method::pagerank;
  if (key == "gravity") return Method::gravity;
  if (key == "degree") return Method::degree;
  if (key == "gg" || key == "wg") {
    throw ConfigError("method '" + std::string(name) +
                      "' is not available: the generalized and weighted gravity models are "
                      "not implemented; use 'gravity' for the classic gravity centrality");
  }
  throw ConfigError("unknown method '" + std::string(name) +
                    "' (expected lvid, lvd, betweenness, pagerank, gravity, degree)");
}

std::vector<NodeId> rank_descending(const std::vector<double>& scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  return order;
}

CentralityScores make_scores(Method method, std::vector<double> scores) {
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) {
      throw NumericalError(std::string(method_name(method)) + " produced a non-finite score for node " +
                           std::to_string(i));
    }
  }
  CentralityScores out;
  out.method = method;
  out.ranking = rank_descending(scores);
  out.scores = std::move(scores);
  return out;
}

std::vector<std::size_t> CentralityScores::ranks() const {
  std::vector<std::size_t> r(ranking.size());
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) r[ranking[pos]] = pos + 1;
  return r;
}

std::vector<NodeId> CentralityScores::top(std::size_t k) const {
  if (k > ranking.size()) {
    throw ArgumentError("requested top-" + std::to_string(k) + " of " +
                        std::to_string(ranking.size()) + " nodes");
  }
  return {ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(k)};
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_scores_csv(std::ostream& out, const Graph& g, const CentralityScores& s) {
  out << "node,label,score,rank\n";
  for (std::size_t pos = 0; pos < s.ranking.size(); ++pos) {
    const NodeId v = s.ranking[pos];
    out << v << ',' << csv_field(g.label(v)) << ',' << format_double(s.scores[v]) << ','
        << pos + 1 << '\n';
  }
}

void write_scores_json(std::ostream& out, const Graph& g, const CentralityScores& s) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t pos = 0; pos < s.ranking.size(); ++pos) {
    const NodeId v = s.ranking[pos];
    rows.push_back({{"node", v}, {"label", g.label(v)}, {"score", s.scores[v]}, {"rank", pos + 1}});
  }
  nlohmann::ordered_json doc{{"method", method_name(s.method)}, {"scores", std::move(rows)}};
  out << doc.dump(2) << '\n';
}

}  // namespace netdim
