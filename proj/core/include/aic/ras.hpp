#pragma once

#include <cstdint>
#include <vector>

#include "aic/diffusion.hpp"
#include "aic/graph.hpp"
#include "aic/rng.hpp"

namespace aic {

/// One reverse attitude sample.
///
/// An edge (x, y) is drawn uniformly from E and its coin flipped with p(x,y).
/// On success, `members` is the set of nodes that reach x in one sampled
/// transpose realization (reverse BFS from x, one coin per edge). The origin
/// coin and the BFS coins belong to the same realization: the origin edge, if
/// re-encountered, keeps its decided state. On failure `members` stays empty,
/// but the sample still counts toward the denominator of every estimator.
struct RRSample {
  Edge origin{};
  bool kept = false;
  std::vector<NodeId> members;  // sorted ids; x included when kept
};

/// Accuracy knobs for the (epsilon, delta) estimators.
struct EstimatorParams {
  double epsilon = 0.1;
  double delta = 0.01;
};

void check_params(const EstimatorParams& p);

/// Draws one sample. Throws ValidationError on an empty graph.
RRSample generate_rr_sample(const Graph& g, RandomStream& rng);

/// sigma_att(S) = |S| + m * P[S hits a sample]; this returns the plug-in
/// estimate |S| + m * X / beta from beta independent samples. Sample i uses
/// base.substream(i), so the value is reproducible at any thread count.
double estimate_attitude(const Graph& g, const SeedSet& s, std::uint64_t beta,
                         RandomStream base, unsigned threads = 1);

/// Samples needed to estimate sigma_att(S) within relative error epsilon with
/// probability 1-delta, given a positive lower bound on sigma_att(S):
///   beta = ceil((2+eps) * m / (eps^2 * sigma_lb) * ln(2/delta)).
/// |S| is always a valid sigma_lb for non-empty S.
std::uint64_t required_samples(const EstimatorParams& params, std::size_t m,
                               double sigma_lb);

/// Expected attitude of a single node: samples are restricted to origin edges
/// entering v (uniform over its in-edges); returns indegree(v) * X / beta,
/// plus 1 if v is a seed. Returns without sampling when indegree(v) = 0.
double estimate_node_attitude(const Graph& g, const SeedSet& s, NodeId v,
                              std::uint64_t beta, RandomStream base,
                              unsigned threads = 1);

/// Reverse-reachable influence sample (vertex-rooted): the classic baseline.
/// The root is drawn uniformly from V and is always a member, so
/// sigma(S) = n * P[S hits a sample].
RRSample generate_rr_influence_sample(const Graph& g, RandomStream& rng);

/// Plug-in influence estimate n * X / beta from beta vertex-rooted samples.
double estimate_influence(const Graph& g, const SeedSet& s, std::uint64_t beta,
                          RandomStream base, unsigned threads = 1);

namespace detail {
/// Shared hot path: reverse BFS over one sampled transpose realization.
/// `visited` must be an all-zero vector of size n; it is restored on return.
void reverse_reach(const Graph& g, NodeId start, RandomStream& rng,
                   std::vector<NodeId>& members, std::vector<std::uint8_t>& visited);
}  // namespace detail

}  // namespace aic
