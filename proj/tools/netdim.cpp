// netdim: node-importance scores and SIR spreading experiments on edge-list graphs.

#include <omp.h>

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netdim/errors.hpp"
#include "netdim/harness.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kNumerical = 3 };

struct CliOptions {
  std::string graph;
  std::vector<std::string> methods{"lvid", "lvd"};
  std::size_t k = 10;
  std::vector<double> beta;
  std::vector<double> gamma;
  int steps = 25;
  int runs = 100;
  std::uint64_t seed = netdim::kDefaultMasterSeed;
  std::string out = "netdim-out";
  std::string format = "csv";
  bool keep_whole_graph = false;
  bool negate_slope = true;
  bool exclude_self = false;
  bool tau_b = false;
  bool per_seed_average = false;
  bool integer_ids = false;
  char comment = '#';
  int threads = 0;
  double damping = 0.85;
  int gravity_radius = 3;
};

void add_common(CLI::App& cmd, CliOptions& o) {
  cmd.add_option("--graph", o.graph, "Edge-list file")->required();
  cmd.add_option("--methods", o.methods,
                 "Comma-separated: lvid, lvd, betweenness, pagerank, gravity, degree")
      ->delimiter(',');
  cmd.add_option("--steps", o.steps, "SIR steps T")->capture_default_str();
  cmd.add_option("--runs", o.runs, "Independent runs N")->capture_default_str();
  cmd.add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd.add_option("--out", o.out, "Output directory")->capture_default_str();
  cmd.add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_flag("--keep-whole-graph", o.keep_whole_graph,
               "Do not reduce the graph to its largest connected component");
  cmd.add_option("--negate-slope", o.negate_slope,
                 "Report the negated regression slope for lvd/lvid")
      ->capture_default_str();
  cmd.add_flag("--exclude-self", o.exclude_self,
               "Leave a node's own degree out of its local volume");
  cmd.add_flag("--tau-b", o.tau_b, "Use tie-corrected Kendall tau-b");
  cmd.add_flag("--integer-ids", o.integer_ids,
               "Treat endpoint tokens as integer ids instead of labels");
  cmd.add_option("--comment", o.comment, "Comment prefix character")->capture_default_str();
  cmd.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)");
  cmd.add_option("--damping", o.damping, "PageRank damping")->capture_default_str();
  cmd.add_option("--gravity-radius", o.gravity_radius, "Gravity cutoff radius")
      ->capture_default_str();
}

netdim::ExperimentSpec to_spec(const CliOptions& o, netdim::ExperimentKind kind) {
  netdim::ExperimentSpec spec;
  spec.experiment = kind;
  spec.dataset = o.graph;
  spec.methods.clear();
  for (const auto& m : o.methods) spec.methods.push_back(netdim::parse_method(m));
  spec.k = o.k;
  spec.sir.steps = o.steps;
  spec.sir.runs = o.runs;
  spec.sir.master_seed = o.seed;
  spec.output_dir = o.out;
  spec.output_format = o.format == "json" ? netdim::OutputFormat::json : netdim::OutputFormat::csv;
  spec.keep_whole_graph = o.keep_whole_graph;
  spec.parse.allow_labels = !o.integer_ids;
  spec.parse.comment_prefix = o.comment;
  spec.rank.dimension.negate_slope = o.negate_slope;
  spec.rank.dimension.include_self = !o.exclude_self;
  spec.rank.pagerank.damping = o.damping;
  spec.rank.gravity_radius = o.gravity_radius;
  spec.tau = o.tau_b ? netdim::TauVariant::b : netdim::TauVariant::a;
  spec.seeding = o.per_seed_average ? netdim::SeedingMode::per_seed_average
                                    : netdim::SeedingMode::simultaneous;

  using netdim::ConfigError;
  switch (kind) {
    case netdim::ExperimentKind::beta_sweep:
      if (!o.beta.empty()) spec.beta_grid = o.beta;
      if (o.gamma.size() > 1) throw ConfigError("beta-sweep takes a single --gamma value");
      spec.sir.gamma = o.gamma.empty() ? 0.0 : o.gamma.front();
      break;
    case netdim::ExperimentKind::gamma_sweep:
      if (!o.gamma.empty()) spec.gamma_grid = o.gamma;
      if (o.beta.size() > 1) throw ConfigError("gamma-sweep takes a single --beta value");
      spec.sir.beta = o.beta.empty() ? 0.05 : o.beta.front();
      break;
    case netdim::ExperimentKind::topk:
    case netdim::ExperimentKind::scores:
      if (o.beta.size() > 1 || o.gamma.size() > 1) {
        throw ConfigError("--beta and --gamma take a single value here");
      }
      spec.sir.beta = o.beta.empty() ? 0.05 : o.beta.front();
      spec.sir.gamma = o.gamma.empty() ? 0.0 : o.gamma.front();
      break;
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local volume (information) dimension and SIR spreading experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(netdim::kVersion));

  CliOptions opts;
  auto* scores = app.add_subcommand("scores", "Write per-method centrality scores");
  auto* topk = app.add_subcommand("topk", "Infection curves seeded by each method's top-k nodes");
  auto* beta = app.add_subcommand("beta-sweep", "Kendall tau vs spreading ability over a beta grid");
  auto* gamma = app.add_subcommand("gamma-sweep", "Kendall tau vs spreading ability over a gamma grid");

  for (auto* cmd : {scores, topk, beta, gamma}) add_common(*cmd, opts);
  topk->add_option("--k", opts.k, "Number of seed nodes")->capture_default_str();
  topk->add_flag("--per-seed-average", opts.per_seed_average,
                 "Average single-seed curves instead of seeding all k at once");
  for (auto* cmd : {scores, topk, gamma}) {
    cmd->add_option("--beta", opts.beta, "Infection probability (default 0.05)")->expected(1);
  }
  beta->add_option("--beta", opts.beta, "Beta grid (default 0.01..0.10)")->delimiter(',');
  for (auto* cmd : {scores, topk, beta}) {
    cmd->add_option("--gamma", opts.gamma, "Recovery probability (default 0)")->expected(1);
  }
  gamma->add_option("--gamma", opts.gamma, "Gamma grid (default 0.0..1.0)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  netdim::ExperimentKind kind = netdim::ExperimentKind::scores;
  if (topk->parsed()) kind = netdim::ExperimentKind::topk;
  if (beta->parsed()) kind = netdim::ExperimentKind::beta_sweep;
  if (gamma->parsed()) kind = netdim::ExperimentKind::gamma_sweep;

  try {
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
    const auto spec = to_spec(opts, kind);
    const auto dataset = netdim::load_dataset(spec);
    for (const auto& w : dataset.warnings) std::cerr << "warning: " << w << '\n';
    if (dataset.parse.self_loops > 0 || dataset.parse.duplicate_edges > 0) {
      std::cerr << "note: dropped " << dataset.parse.self_loops << " self-loops and collapsed "
                << dataset.parse.duplicate_edges << " duplicate edges\n";
    }
    for (const auto& path : netdim::run_experiment(spec)) std::cout << path.string() << '\n';
    return kOk;
  } catch (const netdim::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const netdim::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const netdim::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const netdim::ParseError& e) {
    std::cerr << "error: " << opts.graph << ": " << e.what() << '\n';
    return kIo;
  } catch (const netdim::EmptyGraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const netdim::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
}
