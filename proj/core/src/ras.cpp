#include "aic/ras.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "aic/errors.hpp"
#include "aic/parallel.hpp"

namespace aic {

void check_params(const EstimatorParams& p) {
  if (!(p.epsilon > 0.0 && p.epsilon < 1.0)) {
    throw ValidationError("epsilon must lie in (0,1)");
  }
  if (!(p.delta > 0.0 && p.delta < 1.0)) {
    throw ValidationError("delta must lie in (0,1)");
  }
}

namespace detail {

// Each in-edge of a visited node gets exactly one coin; edges into already
// visited nodes are skipped, which cannot change the reachable set. Reusing
// `visited` across samples avoids re-clearing n bytes per sample.
void reverse_reach(const Graph& g, NodeId start, RandomStream& rng,
                   std::vector<NodeId>& members, std::vector<std::uint8_t>& visited) {
  members.clear();
  members.push_back(start);
  visited[start] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const NodeId w = members[head];
    for (const Arc& a : g.in(w)) {  // transpose out-edges of w
      if (visited[a.node]) continue;
      if (!rng.bernoulli(a.prob)) continue;
      visited[a.node] = 1;
      members.push_back(a.node);
    }
  }
  for (NodeId v : members) visited[v] = 0;
  std::sort(members.begin(), members.end());
}

}  // namespace detail

RRSample generate_rr_sample(const Graph& g, RandomStream& rng) {
  RRSample s;
  s.origin = uniform_random_edge(g, rng);
  s.kept = rng.bernoulli(s.origin.prob);
  if (s.kept) {
    std::vector<std::uint8_t> visited(g.node_count(), 0);
    detail::reverse_reach(g, s.origin.src, rng, s.members, visited);
  }
  return s;
}

RRSample generate_rr_influence_sample(const Graph& g, RandomStream& rng) {
  if (g.node_count() == 0) throw ValidationError("influence sample: empty graph");
  RRSample s;
  const NodeId root = static_cast<NodeId>(rng.next_below(g.node_count()));
  s.origin = Edge{root, root, 1.0};
  s.kept = true;
  std::vector<std::uint8_t> visited(g.node_count(), 0);
  detail::reverse_reach(g, root, rng, s.members, visited);
  return s;
}

double estimate_attitude(const Graph& g, const SeedSet& s, std::uint64_t beta,
                         RandomStream base, unsigned threads) {
  if (beta < 1) throw ValidationError("estimate_attitude: beta must be >= 1");
  check_seeds(g, s);
  if (s.empty()) return 0.0;
  if (g.edge_count() == 0) return static_cast<double>(s.size());

  std::vector<std::uint8_t> is_seed(g.node_count(), 0);
  for (NodeId v : s.nodes) is_seed[v] = 1;

  std::atomic<std::uint64_t> hits{0};
  parallel_blocks(beta, threads, [&](std::size_t first, std::size_t last) {
    std::vector<std::uint8_t> visited(g.node_count(), 0);
    std::vector<NodeId> members;
    std::uint64_t local = 0;
    for (std::size_t i = first; i < last; ++i) {
      RandomStream rng = base.substream(i);
      const Edge& origin = uniform_random_edge(g, rng);
      if (!rng.bernoulli(origin.prob)) continue;
      detail::reverse_reach(g, origin.src, rng, members, visited);
      for (NodeId v : members) {
        if (is_seed[v]) {
          ++local;
          break;
        }
      }
    }
    hits.fetch_add(local, std::memory_order_relaxed);
  });

  // X / beta over all samples drawn, kept or not.
  const double x = static_cast<double>(hits.load());
  return static_cast<double>(s.size()) +
         static_cast<double>(g.edge_count()) * x / static_cast<double>(beta);
}

std::uint64_t required_samples(const EstimatorParams& params, std::size_t m,
                               double sigma_lb) {
  check_params(params);
  if (!(sigma_lb > 0.0)) throw ValidationError("required_samples: sigma_lb must be > 0");
  const double eps = params.epsilon;
  const double beta = (2.0 + eps) * static_cast<double>(m) / (eps * eps * sigma_lb) *
                      std::log(2.0 / params.delta);
  return static_cast<std::uint64_t>(std::ceil(beta));
}

double estimate_influence(const Graph& g, const SeedSet& s, std::uint64_t beta,
                          RandomStream base, unsigned threads) {
  if (beta < 1) throw ValidationError("estimate_influence: beta must be >= 1");
  check_seeds(g, s);
  if (s.empty() || g.node_count() == 0) return 0.0;

  std::vector<std::uint8_t> is_seed(g.node_count(), 0);
  for (NodeId v : s.nodes) is_seed[v] = 1;

  std::atomic<std::uint64_t> hits{0};
  parallel_blocks(beta, threads, [&](std::size_t first, std::size_t last) {
    std::vector<std::uint8_t> visited(g.node_count(), 0);
    std::vector<NodeId> members;
    std::uint64_t local = 0;
    for (std::size_t i = first; i < last; ++i) {
      RandomStream rng = base.substream(i);
      const NodeId root = static_cast<NodeId>(rng.next_below(g.node_count()));
      detail::reverse_reach(g, root, rng, members, visited);
      for (NodeId u : members) {
        if (is_seed[u]) {
          ++local;
          break;
        }
      }
    }
    hits.fetch_add(local, std::memory_order_relaxed);
  });

  return static_cast<double>(g.node_count()) * static_cast<double>(hits.load()) /
         static_cast<double>(beta);
}

double estimate_node_attitude(const Graph& g, const SeedSet& s, NodeId v,
                              std::uint64_t beta, RandomStream base,
                              unsigned threads) {
  if (beta < 1) throw ValidationError("estimate_node_attitude: beta must be >= 1");
  check_seeds(g, s);
  if (v >= g.node_count()) throw ValidationError("node id out of range");

  const double seed_bonus = s.contains(v) ? 1.0 : 0.0;
  const auto in_edges = g.in(v);
  if (in_edges.empty()) return seed_bonus;

  std::vector<std::uint8_t> is_seed(g.node_count(), 0);
  for (NodeId u : s.nodes) is_seed[u] = 1;

  std::atomic<std::uint64_t> hits{0};
  parallel_blocks(beta, threads, [&](std::size_t first, std::size_t last) {
    std::vector<std::uint8_t> visited(g.node_count(), 0);
    std::vector<NodeId> members;
    std::uint64_t local = 0;
    for (std::size_t i = first; i < last; ++i) {
      RandomStream rng = base.substream(i);
      const Arc& a = in_edges[rng.next_below(in_edges.size())];
      if (!rng.bernoulli(a.prob)) continue;
      detail::reverse_reach(g, a.node, rng, members, visited);
      for (NodeId u : members) {
        if (is_seed[u]) {
          ++local;
          break;
        }
      }
    }
    hits.fetch_add(local, std::memory_order_relaxed);
  });

  return seed_bonus + static_cast<double>(in_edges.size()) *
                          static_cast<double>(hits.load()) / static_cast<double>(beta);
}

}  // namespace aic
