#include "aic/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "aic/errors.hpp"

namespace aic {

Graph Graph::from_edges(std::vector<Edge> edges, NodeId n) {
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  const std::size_t m = g.edges_.size();

  g.out_off_.assign(n + 1, 0);
  g.in_off_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_off_[e.src + 1];
    ++g.in_off_[e.dst + 1];
  }
  for (NodeId v = 0; v < n; ++v) {
    g.out_off_[v + 1] += g.out_off_[v];
    g.in_off_[v + 1] += g.in_off_[v];
  }
  g.out_arcs_.resize(m);
  g.in_arcs_.resize(m);
  std::vector<std::size_t> opos(g.out_off_.begin(), g.out_off_.end() - 1);
  std::vector<std::size_t> ipos(g.in_off_.begin(), g.in_off_.end() - 1);
  for (std::uint32_t i = 0; i < m; ++i) {
    const Edge& e = g.edges_[i];
    g.out_arcs_[opos[e.src]++] = Arc{e.dst, e.prob, i};
    g.in_arcs_[ipos[e.dst]++] = Arc{e.src, e.prob, i};
  }
  return g;
}

const Edge& uniform_random_edge(const Graph& g, RandomStream& rng) {
  if (g.edge_count() == 0) throw ValidationError("uniform_random_edge: graph has no edges");
  return g.edge(rng.next_below(g.edge_count()));
}

NodeId LoadedGraph::id_of(const std::string& label) const {
  auto it = label_ids.find(label);
  if (it == label_ids.end()) throw ValidationError("unknown node label: " + label);
  return it->second;
}

bool LoadedGraph::has_label(const std::string& label) const {
  return label_ids.find(label) != label_ids.end();
}

namespace {

struct RawEdge {
  NodeId src, dst;
  double prob;     // NaN until assigned for non-FromFile schemes
  bool has_prob;
};

void check_prob(double p, std::size_t line_no) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "edge probability " << p << " outside [0,1]";
    if (line_no) os << " at line " << line_no;
    throw ValidationError(os.str());
  }
}

LoadedGraph build(std::istream& is, const WeightScheme& scheme, const LoadOptions& opt) {
  if (scheme.kind == WeightScheme::Kind::Constant) check_prob(scheme.p, 0);

  LoadedGraph lg;
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;

  auto intern = [&lg](const std::string& label) -> NodeId {
    auto [it, inserted] = lg.label_ids.try_emplace(label, static_cast<NodeId>(lg.labels.size()));
    if (inserted) lg.labels.push_back(label);
    return it->second;
  };

  while (std::getline(is, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a)) continue;          // blank line
    if (a[0] == '#') continue;         // comment
    if (!(ls >> b)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected `src dst [prob]`");
    }
    RawEdge e{intern(a), intern(b), 0.0, false};
    if (ls >> c) {
      try {
        std::size_t used = 0;
        e.prob = std::stod(c, &used);
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad probability `" + c + "`");
      }
      e.has_prob = true;
      check_prob(e.prob, line_no);
      std::string extra;
      if (ls >> extra) {
        throw ParseError("line " + std::to_string(line_no) + ": trailing token `" + extra + "`");
      }
    } else if (scheme.kind == WeightScheme::Kind::FromFile) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": weight scheme `file` requires a probability column");
    }
    raw.push_back(e);
  }

  if (opt.symmetrize) {
    const std::size_t orig = raw.size();
    raw.reserve(2 * orig);
    for (std::size_t i = 0; i < orig; ++i) {
      RawEdge r = raw[i];
      std::swap(r.src, r.dst);
      raw.push_back(r);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::unordered_set<std::uint64_t> seen;
  if (!opt.keep_multi) seen.reserve(raw.size() * 2);
  for (const RawEdge& r : raw) {
    if (r.src == r.dst && !opt.keep_self_loops) continue;
    if (!opt.keep_multi) {
      const std::uint64_t key = (static_cast<std::uint64_t>(r.src) << 32) | r.dst;
      if (!seen.insert(key).second) continue;  // keep the first occurrence
    }
    edges.push_back(Edge{r.src, r.dst, r.has_prob ? r.prob : 0.0});
  }

  const NodeId n = static_cast<NodeId>(lg.labels.size());
  switch (scheme.kind) {
    case WeightScheme::Kind::Constant:
      for (Edge& e : edges) e.prob = scheme.p;
      break;
    case WeightScheme::Kind::InDegree: {
      std::vector<std::size_t> indeg(n, 0);
      for (const Edge& e : edges) ++indeg[e.dst];
      for (Edge& e : edges) e.prob = 1.0 / static_cast<double>(indeg[e.dst]);
      break;
    }
    case WeightScheme::Kind::FromFile:
      break;  // probabilities already parsed and validated
  }

  lg.graph = Graph::from_edges(std::move(edges), n);
  return lg;
}

}  // namespace

LoadedGraph load_edge_list(const std::string& path, const WeightScheme& scheme,
                           const LoadOptions& options) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open graph file: " + path);
  return build(is, scheme, options);
}

LoadedGraph parse_edge_list(const std::string& text, const WeightScheme& scheme,
                            const LoadOptions& options) {
  std::istringstream is(text);
  return build(is, scheme, options);
}

void write_id_map(const LoadedGraph& lg, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ValidationError("cannot write id map: " + path);
  for (NodeId v = 0; v < lg.labels.size(); ++v) {
    os << lg.labels[v] << '\t' << v << '\n';
  }
}

}  // namespace aic
