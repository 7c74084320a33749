#include "aic/synthetic.hpp"

#include <cmath>
#include <unordered_set>

#include "aic/errors.hpp"

namespace aic {

Graph random_gnm(NodeId n, std::size_t m, double p_min, double p_max,
                 RandomStream rng) {
  if (n < 2 && m > 0) throw ValidationError("random_gnm: need n >= 2 for edges");
  const std::size_t max_edges = static_cast<std::size_t>(n) * (n - 1);
  if (m > max_edges) throw ValidationError("random_gnm: m exceeds n(n-1)");

  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    const NodeId src = static_cast<NodeId>(rng.next_below(n));
    const NodeId dst = static_cast<NodeId>(rng.next_below(n));
    if (src == dst) continue;
    const std::uint64_t key = (static_cast<std::uint64_t>(src) << 32) | dst;
    if (!seen.insert(key).second) continue;
    const double p = p_min + (p_max - p_min) * rng.next_unit();
    edges.push_back(Edge{src, dst, p});
  }
  return Graph::from_edges(std::move(edges), n);
}

Graph preferential_attachment(NodeId n, double pairs_per_node, double p,
                              RandomStream rng) {
  if (n < 2) throw ValidationError("preferential_attachment: need n >= 2");

  std::vector<Edge> edges;
  std::vector<NodeId> endpoints;  // one entry per degree unit
  endpoints.push_back(0);

  double credit = 0.0;
  std::vector<NodeId> picked;
  for (NodeId v = 1; v < n; ++v) {
    credit += pairs_per_node;
    auto attach = static_cast<std::size_t>(credit);
    credit -= static_cast<double>(attach);
    attach = std::max<std::size_t>(1, attach);

    picked.clear();
    for (std::size_t j = 0; j < attach; ++j) {
      NodeId t = endpoints[rng.next_below(endpoints.size())];
      bool dup = false;
      for (int retry = 0; retry < 8; ++retry) {
        dup = false;
        for (NodeId q : picked) {
          if (q == t) {
            dup = true;
            break;
          }
        }
        if (!dup) break;
        t = endpoints[rng.next_below(endpoints.size())];
      }
      if (dup) continue;  // rare on dense prefixes; slightly fewer edges is fine
      picked.push_back(t);
      edges.push_back(Edge{v, t, p});
      edges.push_back(Edge{t, v, p});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(std::move(edges), n);
}

}  // namespace aic
