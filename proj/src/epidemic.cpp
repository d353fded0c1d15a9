#include "netdim/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "netdim/errors.hpp"

namespace netdim {
namespace {

constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// cdf[k] = P(Geometric(q) <= k) on {1, 2, ...} for k = 0..horizon.
std::vector<double> geometric_cdf(double q, std::uint32_t horizon) {
  std::vector<double> cdf(horizon + 1, 0.0);
  const double log_keep = std::log1p(-q);
  for (std::uint32_t k = 1; k <= horizon; ++k) {
    cdf[k] = q >= 1.0 ? 1.0 : -std::expm1(static_cast<double>(k) * log_keep);
  }
  return cdf;
}

// Smallest k in [1, limit] with u < cdf[k]; requires u < cdf[limit].
std::uint32_t first_step_below(const std::vector<double>& cdf, std::uint32_t limit, double u) {
  const auto it = std::upper_bound(cdf.begin() + 1, cdf.begin() + limit + 1, u);
  return static_cast<std::uint32_t>(it - cdf.begin());
}

/// Reusable per-thread state for the event-driven simulation.
class SirKernel {
 public:
  SirKernel(const Graph& g, const SirParams& p)
      : g_(g),
        p_(p),
        horizon_(static_cast<std::uint32_t>(p.steps)),
        delay_cdf_(geometric_cdf(p.beta, horizon_)),
        life_cdf_(geometric_cdf(p.gamma, horizon_)),
        time_(g.node_count(), kNever),
        done_(g.node_count(), 0),
        buckets_(horizon_ + 1),
        infected_at_(horizon_ + 1),
        recovered_at_(horizon_ + 2) {}

  /// Runs one realization; fills infected_at_/recovered_at_ histograms.
  void run(std::span<const NodeId> seeds, std::uint64_t seed) {
    reset();
    rng_.seed(seed);
    for (NodeId s : seeds) {
      if (time_[s] == 0) continue;
      time_[s] = 0;
      touched_.push_back(s);
      buckets_[0].push_back(s);
    }

    for (std::uint32_t t = 0; t <= horizon_; ++t) {
      auto& bucket = buckets_[t];
      // Entries may be appended to later buckets only, so iterating by index is safe.
      for (std::size_t idx = 0; idx < bucket.size(); ++idx) {
        const NodeId u = bucket[idx];
        if (done_[u] || time_[u] != t) continue;
        done_[u] = 1;
        ++infected_at_[t];
        if (t == horizon_) continue;
        spread_from(u, t);
      }
      bucket.clear();
    }
  }

  void add_affected(std::vector<std::uint64_t>& acc) const {
    std::uint64_t running = 0;
    for (std::size_t t = 0; t <= horizon_; ++t) {
      running += infected_at_[t];
      acc[t] += running;
    }
  }

  std::uint32_t final_affected() const {
    std::uint32_t total = 0;
    for (auto c : infected_at_) total += c;
    return total;
  }

  Trajectory trajectory() const {
    Trajectory tr;
    tr.affected.resize(horizon_ + 1);
    tr.recovered.resize(horizon_ + 1);
    std::uint32_t inf = 0, rec = 0;
    for (std::size_t t = 0; t <= horizon_; ++t) {
      inf += infected_at_[t];
      rec += recovered_at_[t];
      tr.affected[t] = inf;
      tr.recovered[t] = rec;
    }
    return tr;
  }

 private:
  void reset() {
    for (NodeId v : touched_) {
      time_[v] = kNever;
      done_[v] = 0;
    }
    touched_.clear();
    std::fill(infected_at_.begin(), infected_at_.end(), 0);
    std::fill(recovered_at_.begin(), recovered_at_.end(), 0);
  }

  // Number of infectious steps: geometric(gamma) on {1, 2, ...}, capped at
  // what the horizon can use.
  std::uint32_t infectious_steps(std::uint32_t cap) {
    if (p_.gamma <= 0.0) return kNever;
    if (p_.gamma >= 1.0) return 1;
    const double u = uniform01(rng_);
    if (u >= life_cdf_[cap]) return kNever;
    return first_step_below(life_cdf_, cap, u);
  }

  void spread_from(NodeId u, std::uint32_t t) {
    const std::uint32_t remaining = horizon_ - t;
    const std::uint32_t life = infectious_steps(remaining);
    if (life != kNever) ++recovered_at_[t + life];
    const std::uint32_t window = std::min(life, remaining);
    if (p_.beta <= 0.0) return;

    for (NodeId v : g_.neighbors(u)) {
      if (time_[v] <= t + 1) continue;
      const double draw = uniform01(rng_);
      // Only delays that land inside the window and beat v's current time matter.
      const std::uint32_t limit = time_[v] == kNever ? window : std::min(window, time_[v] - t - 1);
      if (draw >= delay_cdf_[limit]) continue;
      const std::uint32_t when = t + first_step_below(delay_cdf_, limit, draw);
      if (time_[v] == kNever) touched_.push_back(v);
      time_[v] = when;
      buckets_[when].push_back(v);
    }
  }

  const Graph& g_;
  const SirParams& p_;
  std::uint32_t horizon_;
  std::vector<double> delay_cdf_;
  std::vector<double> life_cdf_;
  std::mt19937_64 rng_;
  std::vector<std::uint32_t> time_;
  std::vector<std::uint8_t> done_;
  std::vector<NodeId> touched_;
  std::vector<std::vector<NodeId>> buckets_;
  std::vector<std::uint32_t> infected_at_;
  std::vector<std::uint32_t> recovered_at_;
};

void check_seeds(const Graph& g, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw ArgumentError("at least one seed node is required");
  for (NodeId s : seeds) {
    if (!g.contains(s)) throw ArgumentError("seed node " + std::to_string(s) + " out of range");
  }
}

std::uint64_t total_final_affected(SirKernel& kernel, NodeId seed, const SirParams& p) {
  const NodeId seeds[] = {seed};
  std::uint64_t total = 0;
  for (int r = 0; r < p.runs; ++r) {
    kernel.run(seeds, derive_run_seed(p.master_seed, seed, static_cast<std::uint64_t>(r)));
    total += kernel.final_affected();
  }
  return total;
}

}  // namespace

void SirParams::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ArgumentError("beta must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError("gamma must lie in [0, 1]");
  if (steps < 1) throw ArgumentError("steps must be >= 1");
  if (runs < 1) throw ArgumentError("runs must be >= 1");
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t run) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ stream);
  return splitmix64(h ^ run);
}

Trajectory simulate_once(const Graph& g, std::span<const NodeId> seeds, const SirParams& p,
                         std::uint64_t run_seed) {
  p.validate();
  check_seeds(g, seeds);
  SirKernel kernel(g, p);
  kernel.run(seeds, run_seed);
  return kernel.trajectory();
}

double spread_score(const Graph& g, NodeId seed, const SirParams& p) {
  p.validate();
  const NodeId seeds[] = {seed};
  check_seeds(g, seeds);
  SirKernel kernel(g, p);
  return static_cast<double>(total_final_affected(kernel, seed, p)) / p.runs;
}

SpreadScores spread_all(const Graph& g, const SirParams& p) {
  p.validate();
  const auto n = static_cast<std::int64_t>(g.node_count());
  SpreadScores out{std::vector<double>(g.node_count()), p};
#pragma omp parallel
  {
    SirKernel kernel(g, p);
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t v = 0; v < n; ++v) {
      out.mean_affected[v] =
          static_cast<double>(total_final_affected(kernel, static_cast<NodeId>(v), p)) / p.runs;
    }
  }
  return out;
}

SpreadScores serial::spread_all(const Graph& g, const SirParams& p) {
  p.validate();
  SpreadScores out{std::vector<double>(g.node_count()), p};
  SirKernel kernel(g, p);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out.mean_affected[v] = static_cast<double>(total_final_affected(kernel, v, p)) / p.runs;
  }
  return out;
}

InfectionCurve seeded_curve(const Graph& g, std::span<const NodeId> seeds, const SirParams& p,
                            SeedingMode mode) {
  p.validate();
  check_seeds(g, seeds);
  const std::size_t len = static_cast<std::size_t>(p.steps) + 1;
  std::vector<std::uint64_t> acc(len, 0);
  SirKernel kernel(g, p);

  double divisor = p.runs;
  if (mode == SeedingMode::simultaneous) {
    // Canonical order so the draws depend only on the seed set.
    std::vector<NodeId> sorted(seeds.begin(), seeds.end());
    std::sort(sorted.begin(), sorted.end());
    for (int r = 0; r < p.runs; ++r) {
      kernel.run(sorted, derive_run_seed(p.master_seed, kMultiSeedStream, static_cast<std::uint64_t>(r)));
      kernel.add_affected(acc);
    }
  } else {
    for (NodeId s : seeds) {
      const NodeId one[] = {s};
      for (int r = 0; r < p.runs; ++r) {
        kernel.run(one, derive_run_seed(p.master_seed, s, static_cast<std::uint64_t>(r)));
        kernel.add_affected(acc);
      }
    }
    divisor *= static_cast<double>(seeds.size());
  }

  InfectionCurve curve;
  curve.seeds.assign(seeds.begin(), seeds.end());
  curve.mean_affected.reserve(len);
  for (auto total : acc) curve.mean_affected.push_back(static_cast<double>(total) / divisor);
  return curve;
}

InfectionCurve topk_curve(const Graph& g, const CentralityScores& scores, std::size_t k,
                          const SirParams& p, SeedingMode mode) {
  if (k == 0) throw ArgumentError("k must be >= 1");
  if (scores.ranking.size() != g.node_count()) {
    throw ArgumentError("scores do not belong to this graph");
  }
  const auto seeds = scores.top(k);
  return seeded_curve(g, seeds, p, mode);
}

void write_curve_csv(std::ostream& out, const InfectionCurve& curve) {
  out << "t,mean_affected\n";
  for (std::size_t t = 0; t < curve.mean_affected.size(); ++t) {
    out << t << ',' << format_double(curve.mean_affected[t]) << '\n';
  }
}

void write_spread_csv(std::ostream& out, const SpreadScores& spread) {
  out << "node,mean_affected\n";
  for (std::size_t v = 0; v < spread.mean_affected.size(); ++v) {
    out << v << ',' << format_double(spread.mean_affected[v]) << '\n';
  }
}

}  // namespace netdim
