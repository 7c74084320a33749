#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "aic/attitude_max.hpp"
#include "aic/diffusion.hpp"
#include "aic/graph.hpp"
#include "aic/rng.hpp"

namespace aic {

/// One rooted sampled transpose subgraph.
///
/// `edges` hold kept transpose edges (from, to) with `from` reached from the
/// root; every original in-edge of a reached node gets exactly one coin.
/// `fan_targets` are the far endpoints of the root's kept fan edges, one per
/// kept original in-edge of the root.
struct RRGraphSample {
  NodeId root = 0;
  std::vector<NodeId> nodes;  // discovery order, root first
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::vector<NodeId> fan_targets;
};

RRGraphSample generate_rr_graph(const Graph& g, NodeId v, RandomStream& rng);

/// Per-root score of a seed set on one sample. F counts fan edges whose far
/// endpoint reaches S inside the sample. Non-seed roots contribute
/// max(F-1, 0): one activated in-edge is "first exposure". A seed root
/// contributes F when seed_correction is on (its first exposure is already
/// paid by seeding); seed_correction=false keeps max(F-1, 0) for every root.
double count_for_set(const RRGraphSample& sample, const SeedSet& s,
                     bool seed_correction = true);

/// Estimates sigma_act(S) = sigma_att(S) - sigma(S): for every root v with
/// indegree > 0 it averages count_for_set over max(1, ceil(a*indegree(v)))
/// samples and sums the averages. Zero-indegree roots contribute exactly 0
/// and are skipped. Root v uses base.substream(v).
double estimate_actionable(const Graph& g, const SeedSet& s, double a,
                           RandomStream base, unsigned threads = 1,
                           bool seed_correction = true);

/// Upper bound for the approximate-submodularity slack: the maximum expected
/// out-degree max_v sum_{(v,w) in E} p(v,w).
double delta_bound(const Graph& g);

/// Stepwise greedy over per-vertex RR graphs.
///
/// Construction scores every candidate u on every sample (count_for_set of
/// the singleton {u}) and aggregates c(u). Each step picks the argmax of
/// c(u) over unselected nodes (ties to the smallest id), then deletes the
/// picked node and its incident edges from every sample containing it and
/// delta-updates the affected scores. Removal never increases any c(u).
class ActionableGreedy {
 public:
  ActionableGreedy(const Graph& g, double a, RandomStream base,
                   unsigned threads = 1, bool seed_correction = true);

  /// Selects and removes the next seed. Throws once all nodes are selected.
  NodeId step();

  const std::vector<double>& counts() const { return c_; }
  std::span<const NodeId> selected() const { return selected_; }
  std::uint64_t sample_count() const { return total_samples_; }

 private:
  struct Sample {
    NodeId root;
    double weight;  // 1 / |R_root|
    bool dead = false;
    std::vector<NodeId> nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<NodeId> fan_targets;
    std::vector<std::pair<NodeId, std::uint32_t>> scores;  // candidate -> raw count
  };

  void score_sample(Sample& s) const;

  const Graph* g_;
  bool correction_;
  std::uint64_t total_samples_ = 0;
  std::vector<Sample> samples_;
  std::vector<std::vector<std::uint32_t>> node_samples_;
  std::vector<double> c_;
  std::vector<std::uint8_t> selected_flag_;
  std::vector<NodeId> selected_;
};

/// Greedy seed selection for actionable attitude; the reported objective is
/// re-estimated on fresh samples with the same multiplier.
SelectionResult maximize_actionable(const Graph& g, std::size_t k, double a,
                                    RandomStream master, unsigned threads = 1,
                                    bool seed_correction = true);

}  // namespace aic
