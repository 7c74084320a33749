#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aic/diffusion.hpp"
#include "aic/graph.hpp"
#include "aic/ras.hpp"
#include "aic/rng.hpp"

namespace aic {

/// Pool of RR samples prepared for max-coverage selection.
///
/// Member lists are stored flattened. Samples whose member set is empty (the
/// origin coin failed) are counted in total_samples but not stored: they can
/// never be covered, and at scale ~90% of samples are empty. `covers` is the
/// inverted index node -> stored sample ids; `covered` flags are all false
/// before a greedy run and afterwards mark exactly the samples hit by the
/// returned seed set.
class CoverageIndex {
 public:
  void add_sample(std::span<const NodeId> members);

  std::uint64_t total_samples() const { return total_; }
  std::size_t stored() const { return offsets_.size() - 1; }
  std::span<const NodeId> members(std::size_t i) const {
    return {data_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  /// Builds the inverted index for node ids in [0, n) and clears `covered`.
  void rebuild_covers(NodeId n);

  const std::vector<std::vector<std::uint32_t>>& covers() const { return covers_; }
  std::vector<std::uint8_t>& covered() { return covered_; }
  std::uint64_t covered_count() const;

 private:
  std::vector<NodeId> data_;
  std::vector<std::size_t> offsets_{0};
  std::uint64_t total_ = 0;
  std::vector<std::vector<std::uint32_t>> covers_;
  std::vector<std::uint8_t> covered_;
};

/// Greedy max coverage: k rounds of argmax over newly covered sample count,
/// ties to the smallest node id. When coverage saturates the zero-gain argmax
/// degenerates to smallest-id fill, so the result always has exactly
/// min(k, n) seeds. Marks covered samples in the index as it goes.
SeedSet greedy_max_coverage(CoverageIndex& index, std::size_t k);

/// Sample size with the union bound over all C(n,k) candidate sets:
///   beta = ceil(m(8+2eps)/(eps^2 opt_lb) * (ln 2 + ln C(n,k) - ln delta)),
/// where opt_lb > 0 lower-bounds the optimum (k is always valid).
std::uint64_t required_samples_max(const EstimatorParams& params, NodeId n,
                                   std::size_t k, std::size_t m, double opt_lb);

/// Outcome of a maximization run.
struct SelectionResult {
  SeedSet seeds;
  double est_objective = 0;     // estimated on a fresh, independent batch
  std::uint64_t beta_used = 0;  // selection pool size
  std::uint64_t fresh_beta = 0; // fresh batch size used for est_objective
  int rounds = 0;               // pool-size levels tried (doubling schedule)
  double elapsed_sec = 0;
  bool capped = false;          // doubling cap hit; result is best-so-far
};

inline constexpr int kMaxDoublings = 32;

/// RR-sample greedy seed selection for total attitude.
///
/// Doubling schedule: the pool starts at the smallest defensible size
/// (required_samples_max at the upper bound k+m of the optimum) and doubles
/// until the pool certifies itself against opt_lb = estimate/(1+eps). The
/// reported objective comes from a fresh batch: the selection pool's own
/// estimate is biased upward at the selected set.
SelectionResult maximize_attitude(const Graph& g, std::size_t k,
                                  const EstimatorParams& params, RandomStream master,
                                  unsigned threads = 1);

/// Same machinery with vertex-rooted samples: plain reverse-reachable
/// influence maximization, provided as a comparison baseline.
SelectionResult maximize_influence(const Graph& g, std::size_t k,
                                   const EstimatorParams& params, RandomStream master,
                                   unsigned threads = 1);

}  // namespace aic
