#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "netdim/graph.hpp"

namespace netdim {

struct ParseOptions {
  /// When true, endpoint tokens are arbitrary labels mapped to dense ids in
  /// first-appearance order. When false they must be nonnegative integers
  /// and are used as ids directly (gaps become isolated nodes).
  bool allow_labels = true;
  char comment_prefix = '#';
};

struct ParseSummary {
  std::size_t lines = 0;
  std::size_t edge_lines = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

struct ParsedGraph {
  Graph graph;
  ParseSummary summary;
};

/// Reads a whitespace-separated edge list. Tokens beyond the first two on
/// a line (weights, timestamps) are ignored; direction is dropped.
/// Throws ParseError for a line with fewer than two tokens and
/// EmptyGraphError when no edge lines are present.
ParsedGraph parse_edge_list(std::istream& in, const ParseOptions& options = {});
ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& options = {});

/// Throws IoError if the file cannot be opened.
ParsedGraph load_edge_list(const std::filesystem::path& path, const ParseOptions& options = {});

/// Writes "u v\n" per undirected edge (u < v by internal id).
void write_edge_list(std::ostream& out, const Graph& g, bool use_labels = false);

}  // namespace netdim
