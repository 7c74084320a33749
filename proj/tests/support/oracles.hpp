#pragma once

#include <cstdint>
#include <vector>

#include "aic/diffusion.hpp"
#include "aic/graph.hpp"

namespace aic::test {

// Test-only enumeration oracles. These deliberately reimplement reachability
// from scratch so the estimators they check share no code with them.

// Exact P[S hits a reverse attitude sample]: averaged over origin edges e,
// the probability that e is live and src(e) is reachable from S in the same
// realization.
inline double exact_rr_hit_probability(const Graph& g, const SeedSet& s) {
  const std::size_t m = g.edge_count();
  const NodeId n = g.node_count();
  double hit = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double w = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      w *= (mask >> i) & 1u ? g.edge(i).prob : 1.0 - g.edge(i).prob;
    }
    if (w == 0.0) continue;

    std::vector<std::uint8_t> reach(n, 0);
    for (NodeId v : s.nodes) reach[v] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (!((mask >> i) & 1u)) continue;
        const Edge& e = g.edge(i);
        if (reach[e.src] && !reach[e.dst]) {
          reach[e.dst] = 1;
          changed = true;
        }
      }
    }
    std::size_t live_hits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (((mask >> i) & 1u) && reach[g.edge(i).src]) ++live_hits;
    }
    hit += w * static_cast<double>(live_hits) / static_cast<double>(m);
  }
  return hit;
}

// Exact E[Att_v(S)] by the same fixed-point sweep; checks per-node results.
inline double exact_node_attitude(const Graph& g, const SeedSet& s, NodeId node) {
  const std::size_t m = g.edge_count();
  const NodeId n = g.node_count();
  double expect = s.contains(node) ? 1.0 : 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    double w = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      w *= (mask >> i) & 1u ? g.edge(i).prob : 1.0 - g.edge(i).prob;
    }
    if (w == 0.0) continue;

    std::vector<std::uint8_t> reach(n, 0);
    for (NodeId v : s.nodes) reach[v] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < m; ++i) {
        if (!((mask >> i) & 1u)) continue;
        const Edge& e = g.edge(i);
        if (reach[e.src] && !reach[e.dst]) {
          reach[e.dst] = 1;
          changed = true;
        }
      }
    }
    std::size_t in_count = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Edge& e = g.edge(i);
      if (((mask >> i) & 1u) && e.dst == node && reach[e.src]) ++in_count;
    }
    expect += w * static_cast<double>(in_count);
  }
  return expect;
}

}  // namespace aic::test
