#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netdim/centrality.hpp"
#include "netdim/epidemic.hpp"
#include "netdim/graph.hpp"
#include "netdim/graph_io.hpp"
#include "netdim/stats.hpp"

namespace netdim {

inline constexpr std::string_view kVersion = "0.3.0";

enum class ExperimentKind { scores, topk, beta_sweep, gamma_sweep };
enum class OutputFormat { csv, json };

std::string_view experiment_name(ExperimentKind kind);

/// 0.01, 0.02, ..., 0.10
std::vector<double> default_beta_grid();
/// 0.0, 0.1, ..., 1.0
std::vector<double> default_gamma_grid();

struct ExperimentSpec {
  std::filesystem::path dataset;
  ExperimentKind experiment = ExperimentKind::scores;
  std::vector<Method> methods{Method::lvid, Method::lvd};
  std::size_t k = 10;
  std::vector<double> beta_grid = default_beta_grid();
  std::vector<double> gamma_grid = default_gamma_grid();
  /// Fixed beta/gamma for experiments that do not sweep them, plus T, N, seed.
  SirParams sir;
  std::filesystem::path output_dir = "netdim-out";
  OutputFormat output_format = OutputFormat::csv;
  bool keep_whole_graph = false;
  ParseOptions parse;
  RankOptions rank;
  TauVariant tau = TauVariant::a;
  SeedingMode seeding = SeedingMode::simultaneous;

  /// Throws ConfigError for empty method lists, non-increasing grids or
  /// grid values outside [0, 1]; ArgumentError for invalid SIR parameters.
  void validate() const;
};

/// Published size of one of the benchmark networks.
struct KnownDataset {
  std::string_view name;
  std::size_t nodes;
  std::size_t edges;
  std::string_view source;
};

std::span<const KnownDataset> dataset_registry();

/// Registry entry whose name or alias matches the file stem, if any.
std::optional<KnownDataset> match_dataset(const std::filesystem::path& path);

struct Dataset {
  std::string name;
  Graph graph;
  ParseSummary parse;
  std::size_t loaded_nodes = 0;
  std::size_t loaded_edges = 0;
  bool component_extracted = false;
  std::vector<std::string> warnings;
};

/// Parses the dataset, reduces it to its largest component unless
/// spec.keep_whole_graph, and compares its size against the registry.
/// Throws IoError (pointing at docs/datasets.md) when the file is missing.
Dataset load_dataset(const ExperimentSpec& spec);

/// Rows are methods, columns grid values; cells are Kendall tau between the
/// method's scores and the mean spreading ability.
struct SweepTable {
  std::string parameter;
  std::vector<double> grid;
  std::vector<Method> methods;
  std::vector<std::vector<double>> tau;
  /// Spreading ability per grid point, shared by all methods.
  std::vector<SpreadScores> spread;

  double cell(Method m, std::size_t column) const;
};

std::vector<CentralityScores> run_scores(const Graph& g, const ExperimentSpec& spec);

/// beta over spec.beta_grid with gamma fixed at spec.sir.gamma.
SweepTable run_beta_sweep(const Graph& g, const ExperimentSpec& spec);
/// gamma over spec.gamma_grid with beta fixed at spec.sir.beta.
SweepTable run_gamma_sweep(const Graph& g, const ExperimentSpec& spec);

struct TopkResult {
  Method method;
  InfectionCurve curve;
};
std::vector<TopkResult> run_topk(const Graph& g, const ExperimentSpec& spec);

/// Header "method,<grid values with two decimals>".
void write_sweep_csv(std::ostream& out, const SweepTable& table);
void write_sweep_json(std::ostream& out, const SweepTable& table);

/// Loads the dataset, runs spec.experiment, and writes manifest.json plus
/// data files into spec.output_dir. Returns the written paths.
std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec);

}  // namespace netdim
