#pragma once

#include <cstddef>

#include "aic/graph.hpp"
#include "aic/rng.hpp"

namespace aic {

/// Random graph builders for experiments, tests and benchmarks.
/// Deterministic for a fixed stream.

/// Directed G(n, m): m distinct edges chosen uniformly among ordered pairs
/// (no self loops), each with probability drawn uniformly in [p_min, p_max].
Graph random_gnm(NodeId n, std::size_t m, double p_min, double p_max,
                 RandomStream rng);

/// Scale-free social graph: undirected preferential attachment emitted in
/// both directions with a constant activation probability. `pairs_per_node`
/// may be fractional; the per-node attachment count follows its running sum.
/// Produces about 2 * pairs_per_node * n directed edges.
Graph preferential_attachment(NodeId n, double pairs_per_node, double p,
                              RandomStream rng);

}  // namespace aic
