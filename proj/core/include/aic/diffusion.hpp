#pragma once

#include <cstdint>
#include <vector>

#include "aic/graph.hpp"
#include "aic/rng.hpp"

namespace aic {

/// Sorted, duplicate-free set of seed nodes.
struct SeedSet {
  std::vector<NodeId> nodes;

  static SeedSet of(std::vector<NodeId> ids);

  std::size_t size() const { return nodes.size(); }
  bool empty() const { return nodes.empty(); }
  bool contains(NodeId v) const;
};

/// Throws ValidationError if any seed id is >= g.node_count().
void check_seeds(const Graph& g, const SeedSet& s);

/// One realized cascade under the attitude-IC process.
///
/// A node's attitude is the number of activation signals it received, plus 1
/// if it is a seed. Per realization, total attitude = |S| + activated_edges.
struct DiffusionOutcome {
  std::vector<std::uint32_t> attitude;
  std::vector<std::uint8_t> influenced;
  std::uint64_t activated_edges = 0;

  std::uint64_t total_attitude() const;
  std::uint64_t influenced_count() const;
};

/// Discrete-round attitude-IC simulation. Round 0 activates the seeds with
/// attitude 1; afterwards every node newly influenced in the previous round
/// flips one coin per out-edge. A success increments the target's attitude
/// (even if the target is already influenced); targets influenced for the
/// first time join the next round's frontier. Each edge is attempted at most
/// once, so the process always terminates.
DiffusionOutcome simulate_aic(const Graph& g, const SeedSet& s, RandomStream& rng);

/// Monte-Carlo sample means over independent cascades.
/// mean_ratio averages the per-trial ratio total-attitude / influenced-count
/// (0 for trials with nothing influenced). Standard errors are 0 at trials=1.
struct McEstimate {
  double mean_att = 0, mean_inf = 0, mean_act = 0, mean_ratio = 0;
  double se_att = 0, se_inf = 0, se_act = 0, se_ratio = 0;
  std::uint64_t trials = 0;
};

/// Runs `trials` cascades; trial i uses base.substream(i), so the result is
/// bitwise identical for a fixed base stream regardless of thread count.
McEstimate mc_estimate(const Graph& g, const SeedSet& s, std::uint64_t trials,
                       RandomStream base, unsigned threads = 1);

/// Exact expectations from full live-edge enumeration (2^m realizations).
struct ExactResult {
  double sigma_att = 0;  // expected total attitude
  double sigma_inf = 0;  // expected influenced count
  double sigma_act = 0;  // expected attitude beyond first exposure
  std::vector<double> per_node_att;
};

inline constexpr std::size_t kMaxExactEdges = 20;
inline constexpr NodeId kMaxExactNodes = 15;

/// Iterates every edge subset, weighting each by prod(kept p) * prod(dropped
/// 1-p), and accumulates reachability, activated edges and per-node attitude.
/// Throws SizeGuardError when m > max_edges.
ExactResult exact_enumerate(const Graph& g, const SeedSet& s,
                            std::size_t max_edges = kMaxExactEdges);

enum class Objective { Attitude, Influence, Actionable };

const char* objective_name(Objective o);

struct BestSeedResult {
  SeedSet seeds;
  double value = 0;
};

/// Exhaustive search over all seed sets of size <= k, evaluated exactly.
/// Ties broken toward the lexicographically smallest sorted seed list.
/// Guards: m <= max_edges, n <= max_nodes (SizeGuardError otherwise).
BestSeedResult exact_best_seed(const Graph& g, std::size_t k, Objective objective,
                               std::size_t max_edges = kMaxExactEdges,
                               NodeId max_nodes = kMaxExactNodes);

}  // namespace aic
