#include "aic/diffusion.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <numeric>

#include "aic/errors.hpp"
#include "aic/parallel.hpp"

namespace aic {

SeedSet SeedSet::of(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return SeedSet{std::move(ids)};
}

bool SeedSet::contains(NodeId v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

void check_seeds(const Graph& g, const SeedSet& s) {
  for (NodeId v : s.nodes) {
    if (v >= g.node_count()) {
      throw ValidationError("seed id " + std::to_string(v) + " out of range (n=" +
                            std::to_string(g.node_count()) + ")");
    }
  }
}

std::uint64_t DiffusionOutcome::total_attitude() const {
  return std::accumulate(attitude.begin(), attitude.end(), std::uint64_t{0});
}

std::uint64_t DiffusionOutcome::influenced_count() const {
  return std::accumulate(influenced.begin(), influenced.end(), std::uint64_t{0});
}

DiffusionOutcome simulate_aic(const Graph& g, const SeedSet& s, RandomStream& rng) {
  check_seeds(g, s);
  const NodeId n = g.node_count();
  DiffusionOutcome out;
  out.attitude.assign(n, 0);
  out.influenced.assign(n, 0);

  std::vector<NodeId> frontier = s.nodes;
  for (NodeId v : frontier) {
    out.attitude[v] = 1;
    out.influenced[v] = 1;
  }
  std::vector<NodeId> next;
  while (!frontier.empty()) {
    next.clear();
    for (NodeId u : frontier) {
      for (const Arc& a : g.out(u)) {
        if (!rng.bernoulli(a.prob)) continue;
        ++out.attitude[a.node];
        ++out.activated_edges;
        if (!out.influenced[a.node]) {
          out.influenced[a.node] = 1;
          next.push_back(a.node);
        }
      }
    }
    frontier.swap(next);
  }
  assert(out.total_attitude() == s.size() + out.activated_edges);
  return out;
}

McEstimate mc_estimate(const Graph& g, const SeedSet& s, std::uint64_t trials,
                       RandomStream base, unsigned threads) {
  if (trials < 1) throw ValidationError("mc_estimate: trials must be >= 1");
  check_seeds(g, s);

  std::vector<std::uint64_t> att(trials), inf(trials);
  parallel_blocks(trials, threads, [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      RandomStream rng = base.substream(i);
      const DiffusionOutcome o = simulate_aic(g, s, rng);
      att[i] = s.size() + o.activated_edges;
      inf[i] = o.influenced_count();
    }
  });

  // Reductions run sequentially in trial order so the result does not depend
  // on the thread count.
  McEstimate r;
  r.trials = trials;
  std::uint64_t att_sum = 0, inf_sum = 0;
  double ratio_sum = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    att_sum += att[i];
    inf_sum += inf[i];
    ratio_sum += inf[i] ? static_cast<double>(att[i]) / static_cast<double>(inf[i]) : 0.0;
  }
  const double nt = static_cast<double>(trials);
  r.mean_att = static_cast<double>(att_sum) / nt;
  r.mean_inf = static_cast<double>(inf_sum) / nt;
  r.mean_act = r.mean_att - r.mean_inf;
  r.mean_ratio = ratio_sum / nt;

  if (trials > 1) {
    double va = 0, vi = 0, vc = 0, vr = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      const double a = static_cast<double>(att[i]);
      const double f = static_cast<double>(inf[i]);
      const double ratio = inf[i] ? a / f : 0.0;
      va += (a - r.mean_att) * (a - r.mean_att);
      vi += (f - r.mean_inf) * (f - r.mean_inf);
      vc += (a - f - r.mean_act) * (a - f - r.mean_act);
      vr += (ratio - r.mean_ratio) * (ratio - r.mean_ratio);
    }
    const double denom = nt * (nt - 1.0);
    r.se_att = std::sqrt(va / denom);
    r.se_inf = std::sqrt(vi / denom);
    r.se_act = std::sqrt(vc / denom);
    r.se_ratio = std::sqrt(vr / denom);
  }
  return r;
}

namespace {

double subset_weight(const Graph& g, std::uint32_t mask) {
  double w = 1.0;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    w *= (mask >> i) & 1u ? edges[i].prob : 1.0 - edges[i].prob;
  }
  return w;
}

void guard_edges(const Graph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) {
    throw SizeGuardError("exact enumeration over 2^m realizations refused: m=" +
                         std::to_string(g.edge_count()) + " > " + std::to_string(max_edges));
  }
}

}  // namespace

ExactResult exact_enumerate(const Graph& g, const SeedSet& s, std::size_t max_edges) {
  guard_edges(g, max_edges);
  check_seeds(g, s);

  const NodeId n = g.node_count();
  const std::size_t m = g.edge_count();
  ExactResult r;
  r.per_node_att.assign(n, 0.0);

  std::vector<std::uint8_t> visited(n, 0);
  std::vector<std::uint32_t> att_scratch(n, 0);
  std::vector<NodeId> stack, touched;

  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const double w = subset_weight(g, static_cast<std::uint32_t>(mask));
    if (w == 0.0) continue;

    // Reachable set from S over kept edges.
    stack.assign(s.nodes.begin(), s.nodes.end());
    for (NodeId v : s.nodes) visited[v] = 1;
    std::size_t nvisited = s.size();
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const Arc& a : g.out(u)) {
        if (!((mask >> a.edge) & 1u) || visited[a.node]) continue;
        visited[a.node] = 1;
        ++nvisited;
        stack.push_back(a.node);
      }
    }

    touched.clear();
    for (NodeId v : s.nodes) {
      att_scratch[v] = 1;
      touched.push_back(v);
    }
    std::uint32_t act = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const Edge& e = g.edge(i);
      if (!visited[e.src]) continue;
      ++act;
      if (att_scratch[e.dst]++ == 0) touched.push_back(e.dst);
    }

    r.sigma_att += w * static_cast<double>(s.size() + act);
    r.sigma_inf += w * static_cast<double>(nvisited);
    r.sigma_act += w * static_cast<double>(s.size() + act - nvisited);
    for (NodeId v : touched) {
      r.per_node_att[v] += w * static_cast<double>(att_scratch[v]);
      att_scratch[v] = 0;
    }
    for (NodeId v : s.nodes) visited[v] = 0;
    // Non-seed visits were reset via touched only if they got attitude; clear
    // the rest explicitly.
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) visited[g.edge(i).dst] = 0;
    }
  }
  return r;
}

const char* objective_name(Objective o) {
  switch (o) {
    case Objective::Attitude: return "attitude";
    case Objective::Influence: return "influence";
    case Objective::Actionable: return "actionable";
  }
  return "?";
}

BestSeedResult exact_best_seed(const Graph& g, std::size_t k, Objective objective,
                               std::size_t max_edges, NodeId max_nodes) {
  guard_edges(g, max_edges);
  const NodeId n = g.node_count();
  if (n > max_nodes || n > 31) {  // reach sets live in 32-bit masks
    throw SizeGuardError("exhaustive seed search refused: n=" + std::to_string(n) +
                         " > " + std::to_string(std::min<NodeId>(max_nodes, 31)));
  }
  if (k == 0 || n == 0) return BestSeedResult{SeedSet{}, 0.0};
  k = std::min<std::size_t>(k, n);

  // All subsets of size <= k, as sorted id lists.
  std::vector<std::vector<NodeId>> cands;
  cands.emplace_back();  // empty set ("size at most k")
  std::vector<NodeId> cur;
  auto recurse = [&](auto&& self, NodeId start) -> void {
    if (cur.size() == k) return;
    for (NodeId v = start; v < n; ++v) {
      cur.push_back(v);
      cands.push_back(cur);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  recurse(recurse, 0);

  const std::size_t m = g.edge_count();
  std::vector<double> acc_att(cands.size(), 0.0), acc_inf(cands.size(), 0.0),
      acc_act(cands.size(), 0.0);

  // One sweep over realizations; per realization, per-node reach bitmasks
  // make every candidate evaluation a few bit operations.
  std::vector<std::uint32_t> reach(n), direct(n), kept_outdeg(n);
  std::vector<NodeId> stack;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const double w = subset_weight(g, static_cast<std::uint32_t>(mask));
    if (w == 0.0) continue;

    std::fill(direct.begin(), direct.end(), 0);
    std::fill(kept_outdeg.begin(), kept_outdeg.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!((mask >> i) & 1u)) continue;
      const Edge& e = g.edge(i);
      direct[e.src] |= std::uint32_t{1} << e.dst;
      ++kept_outdeg[e.src];
    }
    for (NodeId v = 0; v < n; ++v) {
      std::uint32_t seen = std::uint32_t{1} << v;
      stack.assign(1, v);
      while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        std::uint32_t fresh = direct[u] & ~seen;
        seen |= fresh;
        while (fresh) {
          const NodeId t = static_cast<NodeId>(std::countr_zero(fresh));
          fresh &= fresh - 1;
          stack.push_back(t);
        }
      }
      reach[v] = seen;
    }

    for (std::size_t c = 1; c < cands.size(); ++c) {  // cands[0] = empty: all zero
      std::uint32_t rmask = 0;
      for (NodeId v : cands[c]) rmask |= reach[v];
      std::uint32_t act = 0;
      for (std::uint32_t bits = rmask; bits;) {
        const NodeId u = static_cast<NodeId>(std::countr_zero(bits));
        bits &= bits - 1;
        act += kept_outdeg[u];
      }
      const auto size = static_cast<std::uint32_t>(cands[c].size());
      const auto nvis = static_cast<std::uint32_t>(std::popcount(rmask));
      acc_att[c] += w * static_cast<double>(size + act);
      acc_inf[c] += w * static_cast<double>(nvis);
      acc_act[c] += w * static_cast<double>(size + act - nvis);
    }
  }

  const std::vector<double>& value = objective == Objective::Attitude   ? acc_att
                                     : objective == Objective::Influence ? acc_inf
                                                                          : acc_act;
  std::size_t best = 0;
  for (std::size_t c = 1; c < cands.size(); ++c) {
    if (value[c] > value[best] ||
        (value[c] == value[best] &&
         std::lexicographical_compare(cands[c].begin(), cands[c].end(),
                                      cands[best].begin(), cands[best].end()))) {
      best = c;
    }
  }
  return BestSeedResult{SeedSet{cands[best]}, value[best]};
}

}  // namespace aic
