#include "netdim/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "netdim/errors.hpp"

namespace netdim {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off up to two leading tokens; returns how many were found.
int first_two_tokens(std::string_view line, std::string_view& a, std::string_view& b) {
  std::string_view* slots[2] = {&a, &b};
  int found = 0;
  std::size_t i = 0;
  while (found < 2) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    *slots[found++] = line.substr(start, i - start);
  }
  return found;
}

class IdMapper {
 public:
  explicit IdMapper(bool allow_labels) : allow_labels_(allow_labels) {}

  NodeId map(std::string_view token, std::size_t line) {
    if (!allow_labels_) {
      NodeId id = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
      if (ec != std::errc{} || ptr != token.data() + token.size() || id == kNoNode) {
        throw ParseError(line, "expected a nonnegative integer node id, got '" +
                                   std::string(token) + "'");
      }
      max_id_ = std::max<std::size_t>(max_id_, std::size_t{id} + 1);
      return id;
    }
    auto [it, inserted] = ids_.try_emplace(std::string(token), static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.emplace_back(token);
    return it->second;
  }

  std::size_t node_count() const { return allow_labels_ ? labels_.size() : max_id_; }
  std::vector<std::string> take_labels() { return std::move(labels_); }

 private:
  bool allow_labels_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
  std::size_t max_id_ = 0;
};

}  // namespace

ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options) {
  ParseSummary summary;
  IdMapper mapper(options.allow_labels);
  std::vector<Edge> edges;

  std::string line;
  while (std::getline(in, line)) {
    ++summary.lines;
    std::string_view view(line);
    const auto first = std::find_if_not(view.begin(), view.end(), is_space);
    if (first == view.end()) continue;
    if (*first == options.comment_prefix) continue;

    std::string_view a, b;
    if (first_two_tokens(view, a, b) < 2) {
      throw ParseError(summary.lines, "expected two endpoint tokens");
    }
    ++summary.edge_lines;
    const NodeId u = mapper.map(a, summary.lines);
    const NodeId v = mapper.map(b, summary.lines);
    if (u == v) {
      ++summary.self_loops;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (in.bad()) throw IoError("read failure while parsing edge list");
  if (summary.edge_lines == 0) throw EmptyGraphError("edge list contains no edges");

  const std::size_t before = edges.size();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  summary.duplicate_edges = before - edges.size();

  const std::size_t n = mapper.node_count();
  ParsedGraph out{Graph::from_edges(n, edges, mapper.take_labels()), summary};
  return out;
}

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, options);
}

ParsedGraph load_edge_list(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path.string() + "'");
  return parse_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g, bool use_labels) {
  for (auto [u, v] : g.edges()) {
    if (use_labels) {
      out << g.label(u) << ' ' << g.label(v) << '\n';
    } else {
      out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace netdim
