#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "netdim/graph.hpp"
#include "netdim/scores.hpp"

namespace netdim {

inline constexpr std::uint64_t kDefaultMasterSeed = 20211116;

/// Discrete-time SIR configuration. gamma = 0 gives the SI model.
struct SirParams {
  double beta = 0.05;   ///< per-step transmission probability along an edge
  double gamma = 0.0;   ///< per-step recovery probability
  int steps = 25;       ///< T
  int runs = 100;       ///< N independent simulations
  std::uint64_t master_seed = kDefaultMasterSeed;

  /// Throws ArgumentError when a probability is outside [0, 1] or steps/runs < 1.
  void validate() const;
};

/// Per-step counts from one simulation, indexed by t = 0..steps.
struct Trajectory {
  std::vector<std::uint32_t> affected;   ///< |I| + |R|
  std::vector<std::uint32_t> recovered;  ///< |R|
};

/// Stream id used for multi-seed (top-k) simulations, outside the node id range.
inline constexpr std::uint64_t kMultiSeedStream = ~std::uint64_t{0};

/// Seed for run `run` of stream `stream` (a seed node id or kMultiSeedStream).
/// Pure function of its arguments.
std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t run);

/// One synchronous SIR realization. Each step every infected node infects
/// each susceptible neighbor with probability beta; afterwards every node
/// infected before the step recovers with probability gamma. Nodes infected
/// in a step transmit from the next step on; recovered nodes stay immune.
///
/// Implemented as first-passage percolation: per edge the number of steps
/// to a successful transmission is geometric(beta) and per node the number
/// of infectious steps is geometric(gamma), which has the same law as the
/// step-by-step coin flips while drawing once per edge.
/// Throws ArgumentError on an empty seed set or invalid id.
Trajectory simulate_once(const Graph& g, std::span<const NodeId> seeds, const SirParams& p,
                         std::uint64_t run_seed);

/// Mean affected count at step T over p.runs single-seed simulations.
double spread_score(const Graph& g, NodeId seed, const SirParams& p);

struct SpreadScores {
  std::vector<double> mean_affected;
  SirParams params;
};

/// spread_score for every node, parallel over seed nodes.
SpreadScores spread_all(const Graph& g, const SirParams& p);

enum class SeedingMode {
  /// All k seeds infected together at t = 0.
  simultaneous,
  /// Mean of the k single-seed curves.
  per_seed_average,
};

struct InfectionCurve {
  std::vector<double> mean_affected;  ///< t = 0..steps
  std::vector<NodeId> seeds;
};

/// Mean trajectory over p.runs runs from explicit seeds. Simultaneous
/// seeding uses kMultiSeedStream, so identical seed sets give identical
/// curves regardless of which ranking produced them.
InfectionCurve seeded_curve(const Graph& g, std::span<const NodeId> seeds, const SirParams& p,
                            SeedingMode mode = SeedingMode::simultaneous);

/// Curve seeded by the k top-ranked nodes of `scores`.
InfectionCurve topk_curve(const Graph& g, const CentralityScores& scores, std::size_t k,
                          const SirParams& p, SeedingMode mode = SeedingMode::simultaneous);

/// "t,mean_affected"
void write_curve_csv(std::ostream& out, const InfectionCurve& curve);
/// "node,mean_affected"
void write_spread_csv(std::ostream& out, const SpreadScores& spread);

namespace serial {

/// Single-threaded reference for netdim::spread_all; bit-identical output.
SpreadScores spread_all(const Graph& g, const SirParams& p);

}  // namespace serial

}  // namespace netdim
