#include "aic/actionable.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <unordered_map>

#include "aic/errors.hpp"
#include "aic/parallel.hpp"

namespace aic {

namespace {

// `visited` must be all-zero of size n; restored before returning.
void rr_graph_into(const Graph& g, NodeId root, RandomStream& rng, RRGraphSample& s,
                   std::vector<std::uint8_t>& visited) {
  s.root = root;
  s.nodes.assign(1, root);
  s.edges.clear();
  s.fan_targets.clear();
  visited[root] = 1;
  for (std::size_t head = 0; head < s.nodes.size(); ++head) {
    const NodeId w = s.nodes[head];
    for (const Arc& a : g.in(w)) {
      if (!rng.bernoulli(a.prob)) continue;
      s.edges.emplace_back(w, a.node);
      if (w == root) s.fan_targets.push_back(a.node);
      if (!visited[a.node]) {
        visited[a.node] = 1;
        s.nodes.push_back(a.node);
      }
    }
  }
  for (NodeId v : s.nodes) visited[v] = 0;
}

std::uint64_t samples_per_root(double a, std::size_t indegree) {
  return std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(a * static_cast<double>(indegree))));
}

// Raw integer score of a singleton or seed set at one sample root.
std::uint32_t clamp_score(std::uint32_t fan_hits, bool root_is_seed, bool correction) {
  if (root_is_seed && correction) return fan_hits;
  return fan_hits > 0 ? fan_hits - 1 : 0;
}

}  // namespace

RRGraphSample generate_rr_graph(const Graph& g, NodeId v, RandomStream& rng) {
  if (v >= g.node_count()) throw ValidationError("generate_rr_graph: node id out of range");
  RRGraphSample s;
  std::vector<std::uint8_t> visited(g.node_count(), 0);
  rr_graph_into(g, v, rng, s, visited);
  return s;
}

double count_for_set(const RRGraphSample& sample, const SeedSet& s,
                     bool seed_correction) {
  if (sample.fan_targets.empty()) return 0.0;

  // Backward sweep: which sample nodes can reach a seed inside the sample?
  std::unordered_map<NodeId, std::vector<NodeId>> radj;
  for (const auto& [from, to] : sample.edges) radj[to].push_back(from);
  std::unordered_map<NodeId, bool> reaches;
  std::vector<NodeId> stack;
  for (NodeId v : sample.nodes) {
    if (s.contains(v)) {
      reaches[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    auto it = radj.find(v);
    if (it == radj.end()) continue;
    for (NodeId u : it->second) {
      if (reaches.emplace(u, true).second) stack.push_back(u);
    }
  }

  std::uint32_t fan_hits = 0;
  for (NodeId t : sample.fan_targets) {
    if (reaches.count(t)) ++fan_hits;
  }
  return static_cast<double>(
      clamp_score(fan_hits, s.contains(sample.root), seed_correction));
}

double estimate_actionable(const Graph& g, const SeedSet& s, double a,
                           RandomStream base, unsigned threads,
                           bool seed_correction) {
  if (!(a >= 1.0)) throw ValidationError("estimate_actionable: a must be >= 1");
  check_seeds(g, s);
  const NodeId n = g.node_count();

  std::vector<double> contrib(n, 0.0);
  parallel_blocks(n, threads, [&](std::size_t first, std::size_t last) {
    std::vector<std::uint8_t> visited(n, 0);
    RRGraphSample sample;
    for (std::size_t v = first; v < last; ++v) {
      const std::size_t indeg = g.in_degree(static_cast<NodeId>(v));
      if (indeg == 0) continue;  // contributes 0 deterministically
      const std::uint64_t count = samples_per_root(a, indeg);
      RandomStream root_base = base.substream(v);
      double sum = 0.0;
      for (std::uint64_t i = 0; i < count; ++i) {
        RandomStream rng = root_base.substream(i);
        rr_graph_into(g, static_cast<NodeId>(v), rng, sample, visited);
        sum += count_for_set(sample, s, seed_correction);
      }
      contrib[v] = sum / static_cast<double>(count);
    }
  });

  double total = 0.0;
  for (NodeId v = 0; v < n; ++v) total += contrib[v];
  return total;
}

double delta_bound(const Graph& g) {
  double best = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double expected = 0.0;
    for (const Arc& a : g.out(v)) expected += a.prob;
    best = std::max(best, expected);
  }
  return best;
}

void ActionableGreedy::score_sample(Sample& s) const {
  s.scores.clear();
  if (s.dead || s.fan_targets.empty()) return;

  std::unordered_map<NodeId, std::uint32_t> local;
  local.reserve(s.nodes.size() * 2);
  for (std::uint32_t i = 0; i < s.nodes.size(); ++i) local.emplace(s.nodes[i], i);

  std::vector<std::vector<std::uint32_t>> adj(s.nodes.size());
  for (const auto& [from, to] : s.edges) adj[local[from]].push_back(local[to]);

  // fan_count[i]: how many of the root's fan edges reach node i.
  std::vector<std::uint32_t> fan_count(s.nodes.size(), 0);
  std::vector<std::uint8_t> seen(s.nodes.size());
  std::vector<std::uint32_t> stack;
  for (NodeId t : s.fan_targets) {
    std::fill(seen.begin(), seen.end(), 0);
    const std::uint32_t start = local[t];
    seen[start] = 1;
    stack.assign(1, start);
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      stack.pop_back();
      ++fan_count[u];
      for (std::uint32_t w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }

  for (std::uint32_t i = 0; i < s.nodes.size(); ++i) {
    const bool is_root = s.nodes[i] == s.root;
    const std::uint32_t sc = clamp_score(fan_count[i], is_root, correction_);
    if (sc > 0) s.scores.emplace_back(s.nodes[i], sc);
  }
}

ActionableGreedy::ActionableGreedy(const Graph& g, double a, RandomStream base,
                                   unsigned threads, bool seed_correction)
    : g_(&g), correction_(seed_correction) {
  if (!(a >= 1.0)) throw ValidationError("ActionableGreedy: a must be >= 1");
  const NodeId n = g.node_count();

  // Sample slots per root, laid out root-major so generation can run in
  // parallel while the sample order stays fixed.
  std::vector<std::uint64_t> first_slot(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) {
    const std::size_t indeg = g.in_degree(v);
    first_slot[v + 1] = first_slot[v] + (indeg == 0 ? 0 : samples_per_root(a, indeg));
  }
  total_samples_ = first_slot[n];
  samples_.resize(total_samples_);

  parallel_blocks(n, threads, [&](std::size_t firstv, std::size_t lastv) {
    std::vector<std::uint8_t> visited(n, 0);
    for (std::size_t v = firstv; v < lastv; ++v) {
      const std::uint64_t lo = first_slot[v], hi = first_slot[v + 1];
      if (lo == hi) continue;
      RandomStream root_base = base.substream(v);
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        Sample& s = samples_[idx];
        RandomStream rng = root_base.substream(idx - lo);
        RRGraphSample raw;
        rr_graph_into(g, static_cast<NodeId>(v), rng, raw, visited);
        s.root = raw.root;
        s.weight = 1.0 / static_cast<double>(hi - lo);
        s.nodes = std::move(raw.nodes);
        s.edges = std::move(raw.edges);
        s.fan_targets = std::move(raw.fan_targets);
        score_sample(s);
      }
    }
  });

  c_.assign(n, 0.0);
  node_samples_.assign(n, {});
  for (std::uint32_t sid = 0; sid < samples_.size(); ++sid) {
    const Sample& s = samples_[sid];
    for (NodeId v : s.nodes) node_samples_[v].push_back(sid);
    for (const auto& [u, sc] : s.scores) c_[u] += s.weight * sc;
  }
  selected_flag_.assign(n, 0);
}

NodeId ActionableGreedy::step() {
  const NodeId n = g_->node_count();
  if (selected_.size() >= n) throw ValidationError("ActionableGreedy: all nodes selected");

  NodeId best = n;
  for (NodeId u = 0; u < n; ++u) {
    if (selected_flag_[u]) continue;
    if (best == n || c_[u] > c_[best]) best = u;
  }
  selected_flag_[best] = 1;
  selected_.push_back(best);

  for (std::uint32_t sid : node_samples_[best]) {
    Sample& s = samples_[sid];
    if (s.dead) continue;
    if (std::find(s.nodes.begin(), s.nodes.end(), best) == s.nodes.end()) continue;

    for (const auto& [u, sc] : s.scores) c_[u] -= s.weight * sc;
    if (s.root == best) {
      s.dead = true;
      s.nodes.clear();
      s.edges.clear();
      s.fan_targets.clear();
      s.scores.clear();
      continue;
    }
    std::erase(s.nodes, best);
    std::erase_if(s.edges, [best](const std::pair<NodeId, NodeId>& e) {
      return e.first == best || e.second == best;
    });
    std::erase(s.fan_targets, best);
    score_sample(s);
    for (const auto& [u, sc] : s.scores) c_[u] += s.weight * sc;
  }
  return best;
}

SelectionResult maximize_actionable(const Graph& g, std::size_t k, double a,
                                    RandomStream master, unsigned threads,
                                    bool seed_correction) {
  if (k < 1) throw ValidationError("maximize_actionable: k must be >= 1");
  if (k > g.node_count()) throw ValidationError("maximize_actionable: k exceeds node count");

  const auto t0 = std::chrono::steady_clock::now();
  ActionableGreedy greedy(g, a, master.substream(0), threads, seed_correction);
  for (std::size_t i = 0; i < k; ++i) greedy.step();

  SelectionResult r;
  r.seeds = SeedSet::of({greedy.selected().begin(), greedy.selected().end()});
  r.beta_used = greedy.sample_count();
  r.fresh_beta = greedy.sample_count();
  r.est_objective =
      estimate_actionable(g, r.seeds, a, master.substream(1), threads, seed_correction);
  r.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace aic
