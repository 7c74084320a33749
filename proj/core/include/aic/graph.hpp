#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "aic/rng.hpp"

namespace aic {

/// Dense node index in [0, n). External labels are remapped at load time.
using NodeId = std::uint32_t;

/// Directed weighted edge: prob is the chance src activates dst.
struct Edge {
  NodeId src;
  NodeId dst;
  double prob;
};

/// Adjacency entry. `edge` is the index into Graph::edges() of the underlying
/// edge, shared between the forward and transpose views.
struct Arc {
  NodeId node;
  double prob;
  std::uint32_t edge;
};

/// Immutable weighted directed graph with forward and transpose adjacency and
/// a flat edge list for uniform random edge choice. Safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  /// Builds CSR adjacency (both directions) from a cleaned edge list.
  /// Edges must already satisfy src,dst < n; ids keep their list order.
  static Graph from_edges(std::vector<Edge> edges, NodeId n);

  NodeId node_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  /// Out-arcs of u: one entry per edge (u, v).
  std::span<const Arc> out(NodeId u) const {
    return {out_arcs_.data() + out_off_[u], out_off_[u + 1] - out_off_[u]};
  }
  /// In-arcs of v: one entry per edge (u, v); Arc::node is the source u.
  std::span<const Arc> in(NodeId v) const {
    return {in_arcs_.data() + in_off_[v], in_off_[v + 1] - in_off_[v]};
  }

  std::size_t out_degree(NodeId u) const { return out_off_[u + 1] - out_off_[u]; }
  std::size_t in_degree(NodeId v) const { return in_off_[v + 1] - in_off_[v]; }

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_off_, in_off_;
  std::vector<Arc> out_arcs_, in_arcs_;
};

/// Adjacency accessor for the transpose: for every edge (u, v, p) it yields
/// (v, u, p). No copy; arcs alias the owning graph's in/out arrays.
class TransposeView {
 public:
  explicit TransposeView(const Graph& g) : g_(&g) {}
  NodeId node_count() const { return g_->node_count(); }
  std::size_t edge_count() const { return g_->edge_count(); }
  std::span<const Arc> out(NodeId v) const { return g_->in(v); }
  std::span<const Arc> in(NodeId u) const { return g_->out(u); }

 private:
  const Graph* g_;
};

inline TransposeView transpose_view(const Graph& g) { return TransposeView(g); }

/// Uniform choice over all m edges, each with probability exactly 1/m.
/// Throws ValidationError on an empty graph.
const Edge& uniform_random_edge(const Graph& g, RandomStream& rng);

/// How edge probabilities are assigned at load time.
struct WeightScheme {
  enum class Kind { Constant, InDegree, FromFile };
  Kind kind = Kind::Constant;
  double p = 0.1;  // Constant only

  static WeightScheme constant(double p) { return {Kind::Constant, p}; }
  static WeightScheme in_degree() { return {Kind::InDegree, 0.0}; }
  static WeightScheme from_file() { return {Kind::FromFile, 0.0}; }
};

struct LoadOptions {
  bool keep_self_loops = false;  // default: self-loops dropped
  bool keep_multi = false;       // default: duplicate (src,dst) deduplicated, first kept
  bool symmetrize = false;       // add the reverse of every edge before cleanup
};

/// A loaded graph plus the label <-> dense id mapping.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> labels;  // internal id -> original label

  NodeId id_of(const std::string& label) const;   // throws ValidationError
  bool has_label(const std::string& label) const;

  std::unordered_map<std::string, NodeId> label_ids;
};

/// Parses a whitespace-separated edge list: `src dst [prob]`, `#` comments.
/// Labels are arbitrary tokens and are densely renumbered in first-appearance
/// order. Throws ParseError (with line number) or ValidationError.
LoadedGraph load_edge_list(const std::string& path, const WeightScheme& scheme,
                           const LoadOptions& options = {});

/// Same, from in-memory text. Used heavily by tests.
LoadedGraph parse_edge_list(const std::string& text, const WeightScheme& scheme,
                            const LoadOptions& options = {});

/// Writes the sidecar mapping as `label<TAB>internal_id` lines, one per node.
void write_id_map(const LoadedGraph& lg, const std::string& path);

}  // namespace aic
