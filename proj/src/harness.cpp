#include "netdim/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "netdim/errors.hpp"

namespace netdim {
namespace {

using nlohmann::ordered_json;

constexpr KnownDataset kRegistry[] = {
    {"jazz", 198, 2742, "Jazz musicians collaboration network (KONECT: arenas-jazz)"},
    {"ns", 379, 914, "Network science co-authorship, largest component (Newman netscience)"},
    {"pb", 1222, 16714, "Political blogs, largest component (Adamic-Glance polblogs)"},
    {"celegans", 297, 2359, "C. elegans neural network (Watts-Strogatz; directed, weighted)"},
    {"infectious", 410, 17298, "SocioPatterns Infectious contact list (KONECT: sociopatterns-infectious)"},
    {"pdzbase", 212, 2672, "PDZ-domain protein interactions (KONECT: maayan-pdzbase)"},
};

struct Alias {
  std::string_view alias;
  std::string_view name;
};

constexpr Alias kAliases[] = {
    {"jazz", "jazz"},           {"arenas-jazz", "jazz"},
    {"ns", "ns"},               {"netscience", "ns"},
    {"pb", "pb"},               {"polblogs", "pb"},
    {"celegans", "celegans"},   {"celegansneural", "celegans"},
    {"c.elegans", "celegans"},  {"infectious", "infectious"},
    {"sociopatterns-infectious", "infectious"},
    {"pdzbase", "pdzbase"},     {"maayan-pdzbase", "pdzbase"},
    {"pdz", "pdzbase"},
};

std::string lower(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return text;
}

std::string grid_label(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

void check_grid(const std::vector<double>& grid, std::string_view name) {
  if (grid.empty()) throw ConfigError(std::string(name) + " grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) {
      throw ConfigError(std::string(name) + " grid value " + format_double(grid[i]) +
                        " lies outside [0, 1]");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ConfigError(std::string(name) + " grid must be strictly increasing");
    }
  }
}

std::vector<CentralityScores> score_methods(const Graph& g, const ExperimentSpec& spec) {
  std::vector<CentralityScores> out;
  out.reserve(spec.methods.size());
  for (Method m : spec.methods) out.push_back(rank_all(g, m, spec.rank));
  return out;
}

SweepTable run_sweep(const Graph& g, const ExperimentSpec& spec, bool sweep_beta) {
  spec.validate();
  SweepTable table;
  table.parameter = sweep_beta ? "beta" : "gamma";
  table.grid = sweep_beta ? spec.beta_grid : spec.gamma_grid;
  table.methods = spec.methods;
  table.tau.assign(spec.methods.size(), std::vector<double>(table.grid.size()));

  const auto scores = score_methods(g, spec);
  for (std::size_t col = 0; col < table.grid.size(); ++col) {
    SirParams p = spec.sir;
    (sweep_beta ? p.beta : p.gamma) = table.grid[col];
    auto spread = spread_all(g, p);
    for (std::size_t row = 0; row < scores.size(); ++row) {
      table.tau[row][col] = kendall_tau(scores[row].scores, spread.mean_affected, spec.tau);
    }
    table.spread.push_back(std::move(spread));
  }
  return table;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

ordered_json spec_json(const ExperimentSpec& spec) {
  ordered_json methods = ordered_json::array();
  for (Method m : spec.methods) methods.push_back(method_name(m));
  ordered_json doc{
      {"experiment", experiment_name(spec.experiment)},
      {"dataset", spec.dataset.generic_string()},
      {"methods", methods},
      {"sir",
       {{"beta", spec.sir.beta},
        {"gamma", spec.sir.gamma},
        {"steps", spec.sir.steps},
        {"runs", spec.sir.runs},
        {"master_seed", spec.sir.master_seed}}},
      {"keep_whole_graph", spec.keep_whole_graph},
      {"include_self", spec.rank.dimension.include_self},
      {"negate_slope", spec.rank.dimension.negate_slope},
      {"pagerank_damping", spec.rank.pagerank.damping},
      {"gravity_radius", spec.rank.gravity_radius},
      {"tau", spec.tau == TauVariant::a ? "a" : "b"},
      {"format", spec.output_format == OutputFormat::csv ? "csv" : "json"},
  };
  if (spec.experiment == ExperimentKind::beta_sweep) doc["beta_grid"] = spec.beta_grid;
  if (spec.experiment == ExperimentKind::gamma_sweep) doc["gamma_grid"] = spec.gamma_grid;
  if (spec.experiment == ExperimentKind::topk) {
    doc["k"] = spec.k;
    doc["seeding"] =
        spec.seeding == SeedingMode::simultaneous ? "simultaneous" : "per_seed_average";
  }
  return doc;
}

ordered_json dataset_json(const Dataset& d) {
  return ordered_json{
      {"name", d.name},
      {"nodes", d.graph.node_count()},
      {"edges", d.graph.edge_count()},
      {"loaded_nodes", d.loaded_nodes},
      {"loaded_edges", d.loaded_edges},
      {"edge_lines", d.parse.edge_lines},
      {"duplicate_edges", d.parse.duplicate_edges},
      {"self_loops", d.parse.self_loops},
      {"largest_component", d.component_extracted},
      {"connected", is_connected(d.graph)},
      {"warnings", d.warnings},
  };
}

void write_curves_table(std::ostream& out, const std::vector<TopkResult>& results) {
  out << "t";
  for (const auto& r : results) out << ',' << method_name(r.method);
  out << '\n';
  const std::size_t len = results.empty() ? 0 : results.front().curve.mean_affected.size();
  for (std::size_t t = 0; t < len; ++t) {
    out << t;
    for (const auto& r : results) out << ',' << format_double(r.curve.mean_affected[t]);
    out << '\n';
  }
}

}  // namespace

std::string_view experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::scores: return "scores";
    case ExperimentKind::topk: return "topk";
    case ExperimentKind::beta_sweep: return "beta-sweep";
    case ExperimentKind::gamma_sweep: return "gamma-sweep";
  }
  return "unknown";
}

std::vector<double> default_beta_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(i / 100.0);
  return grid;
}

std::vector<double> default_gamma_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

void ExperimentSpec::validate() const {
  if (methods.empty()) throw ConfigError("no methods requested");
  sir.validate();
  if (experiment == ExperimentKind::beta_sweep) check_grid(beta_grid, "beta");
  if (experiment == ExperimentKind::gamma_sweep) check_grid(gamma_grid, "gamma");
  if (experiment == ExperimentKind::topk && k == 0) throw ConfigError("k must be >= 1");
}

std::span<const KnownDataset> dataset_registry() { return kRegistry; }

std::optional<KnownDataset> match_dataset(const std::filesystem::path& path) {
  const std::string stem = lower(path.stem().string());
  for (const auto& alias : kAliases) {
    if (stem == alias.alias) {
      for (const auto& known : kRegistry) {
        if (known.name == alias.name) return known;
      }
    }
  }
  return std::nullopt;
}

Dataset load_dataset(const ExperimentSpec& spec) {
  if (!std::filesystem::exists(spec.dataset)) {
    throw IoError("dataset '" + spec.dataset.string() +
                  "' not found; see docs/datasets.md for where to obtain the benchmark networks");
  }
  auto parsed = load_edge_list(spec.dataset, spec.parse);

  Dataset d;
  d.name = spec.dataset.stem().string();
  d.parse = parsed.summary;
  d.loaded_nodes = parsed.graph.node_count();
  d.loaded_edges = parsed.graph.edge_count();
  if (spec.keep_whole_graph || is_connected(parsed.graph)) {
    d.graph = std::move(parsed.graph);
  } else {
    d.graph = largest_component(parsed.graph).graph;
    d.component_extracted = true;
  }

  if (auto known = match_dataset(spec.dataset)) {
    const bool nodes_ok = known->nodes == d.graph.node_count() || known->nodes == d.loaded_nodes;
    const bool edges_ok = known->edges == d.graph.edge_count() ||
                          known->edges == d.loaded_edges || known->edges == d.parse.edge_lines;
    if (!nodes_ok || !edges_ok) {
      d.warnings.push_back("expected " + std::to_string(known->nodes) + " nodes / " +
                           std::to_string(known->edges) + " edges for '" +
                           std::string(known->name) + "', loaded " +
                           std::to_string(d.graph.node_count()) + " / " +
                           std::to_string(d.graph.edge_count()));
    }
  }
  return d;
}

double SweepTable::cell(Method m, std::size_t column) const {
  for (std::size_t row = 0; row < methods.size(); ++row) {
    if (methods[row] == m) return tau.at(row).at(column);
  }
  throw ArgumentError("method " + std::string(method_name(m)) + " not in sweep table");
}

std::vector<CentralityScores> run_scores(const Graph& g, const ExperimentSpec& spec) {
  spec.validate();
  return score_methods(g, spec);
}

SweepTable run_beta_sweep(const Graph& g, const ExperimentSpec& spec) {
  return run_sweep(g, spec, true);
}

SweepTable run_gamma_sweep(const Graph& g, const ExperimentSpec& spec) {
  return run_sweep(g, spec, false);
}

std::vector<TopkResult> run_topk(const Graph& g, const ExperimentSpec& spec) {
  spec.validate();
  if (spec.k > g.node_count()) {
    throw ConfigError("k = " + std::to_string(spec.k) + " exceeds the node count " +
                      std::to_string(g.node_count()));
  }
  std::vector<TopkResult> out;
  for (const auto& scores : score_methods(g, spec)) {
    out.push_back({scores.method, topk_curve(g, scores, spec.k, spec.sir, spec.seeding)});
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << "method";
  for (double v : table.grid) out << ',' << grid_label(v);
  out << '\n';
  for (std::size_t row = 0; row < table.methods.size(); ++row) {
    out << method_name(table.methods[row]);
    for (double tau : table.tau[row]) out << ',' << format_double(tau);
    out << '\n';
  }
}

void write_sweep_json(std::ostream& out, const SweepTable& table) {
  ordered_json rows = ordered_json::array();
  for (std::size_t row = 0; row < table.methods.size(); ++row) {
    rows.push_back({{"method", method_name(table.methods[row])}, {"tau", table.tau[row]}});
  }
  ordered_json doc{{"parameter", table.parameter}, {"grid", table.grid}, {"rows", rows}};
  out << doc.dump(2) << '\n';
}

std::vector<std::filesystem::path> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const Dataset dataset = load_dataset(spec);
  const Graph& g = dataset.graph;

  std::error_code ec;
  std::filesystem::create_directories(spec.output_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + spec.output_dir.string() + "'");

  const bool csv = spec.output_format == OutputFormat::csv;
  const std::string ext = csv ? ".csv" : ".json";
  std::vector<std::filesystem::path> written;
  auto emit = [&](const std::string& file, auto&& writer) {
    const auto path = spec.output_dir / file;
    auto out = open_output(path);
    writer(out);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
    written.push_back(path);
  };

  ordered_json manifest{{"tool", "netdim"},
                        {"version", kVersion},
                        {"spec", spec_json(spec)},
                        {"graph", dataset_json(dataset)}};

  switch (spec.experiment) {
    case ExperimentKind::scores: {
      for (const auto& scores : run_scores(g, spec)) {
        emit("scores_" + std::string(method_name(scores.method)) + ext, [&](std::ostream& out) {
          csv ? write_scores_csv(out, g, scores) : write_scores_json(out, g, scores);
        });
      }
      break;
    }
    case ExperimentKind::beta_sweep:
    case ExperimentKind::gamma_sweep: {
      const bool beta = spec.experiment == ExperimentKind::beta_sweep;
      const SweepTable table = beta ? run_beta_sweep(g, spec) : run_gamma_sweep(g, spec);
      emit(table.parameter + "_sweep" + ext, [&](std::ostream& out) {
        csv ? write_sweep_csv(out, table) : write_sweep_json(out, table);
      });
      for (std::size_t col = 0; col < table.grid.size(); ++col) {
        emit("spread_" + table.parameter + "_" + grid_label(table.grid[col]) + ".csv",
             [&](std::ostream& out) { write_spread_csv(out, table.spread[col]); });
      }
      break;
    }
    case ExperimentKind::topk: {
      const auto results = run_topk(g, spec);
      ordered_json seeds = ordered_json::object();
      for (const auto& r : results) {
        const std::string name(method_name(r.method));
        seeds[name] = r.curve.seeds;
        if (csv) {
          emit("curve_" + name + ".csv",
               [&](std::ostream& out) { write_curve_csv(out, r.curve); });
        }
      }
      manifest["topk_seeds"] = seeds;
      emit(std::string("topk") + ext, [&](std::ostream& out) {
        if (csv) {
          write_curves_table(out, results);
          return;
        }
        ordered_json doc = ordered_json::object();
        for (const auto& r : results) {
          doc[std::string(method_name(r.method))] = {{"seeds", r.curve.seeds},
                                                     {"mean_affected", r.curve.mean_affected}};
        }
        out << doc.dump(2) << '\n';
      });
      break;
    }
  }

  emit("manifest.json", [&](std::ostream& out) { out << manifest.dump(2) << '\n'; });
  return written;
}

}  // namespace netdim
