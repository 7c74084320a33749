#pragma once

#include <vector>

#include "aic/diffusion.hpp"
#include "aic/graph.hpp"

namespace aic::test {

// 3-cycle in both directions: a=0, b=1, c=2, six edges.
// With p=1 and seed {a}: attitudes (3,2,2), total 7, influenced 3.
inline Graph triangle_graph(double p = 1.0) {
  return Graph::from_edges({{0, 1, p}, {1, 0, p}, {0, 2, p}, {2, 0, p}, {1, 2, p}, {2, 1, p}},
                           3);
}

// Star: hub 0 -> leaves 1..4. With p=1 and seed {hub}: total attitude 5.
inline Graph star_graph(double p = 1.0) {
  return Graph::from_edges({{0, 1, p}, {0, 2, p}, {0, 3, p}, {0, 4, p}}, 5);
}

// Disjoint union of the triangle (a,b,c = 0,1,2) and the star (d=3 -> e,f,g,h).
// The influence optimum {d} and the attitude optimum {a,b,c} diverge.
inline Graph triangle_star_graph(double p = 1.0) {
  return Graph::from_edges({{0, 1, p},
                            {1, 0, p},
                            {0, 2, p},
                            {2, 0, p},
                            {1, 2, p},
                            {2, 1, p},
                            {3, 4, p},
                            {3, 5, p},
                            {3, 6, p},
                            {3, 7, p}},
                           8);
}

// Non-submodularity witness: s=0, a=1, b=2, t=3, c=4, v=5, d=6 with edges
// s->a, s->b, b->a and t->c, v->c, c->d. With p=1, sigma_act is 1, 1, 1, 2
// for {s}, {s,t}, {s,v}, {s,t,v}.
inline Graph collider_graph(double p = 1.0) {
  return Graph::from_edges({{0, 1, p}, {0, 2, p}, {2, 1, p}, {3, 4, p}, {5, 4, p}, {4, 6, p}},
                           7);
}

// Chain 0 -> 1 -> 2; in-degrees <= 1, so attitude equals influence.
inline Graph chain_graph(double p = 0.5) {
  return Graph::from_edges({{0, 1, p}, {1, 2, p}}, 3);
}

inline SeedSet seeds(std::vector<NodeId> ids) { return SeedSet::of(std::move(ids)); }

}  // namespace aic::test
