#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "aic/errors.hpp"
#include "aic/graph.hpp"
#include "aic/rng.hpp"
#include "aic/synthetic.hpp"

using namespace aic;

TEST_SUITE_BEGIN("graph");

TEST_CASE("constant scheme assigns the probability to every edge") {
  const LoadedGraph lg = parse_edge_list("a b\nb c\n", WeightScheme::constant(0.5));
  CHECK(lg.graph.node_count() == 3);
  CHECK(lg.graph.edge_count() == 2);
  for (const Edge& e : lg.graph.edges()) CHECK(e.prob == 0.5);
  CHECK(lg.id_of("a") == 0);
  CHECK(lg.id_of("b") == 1);
  CHECK(lg.id_of("c") == 2);
}

TEST_CASE("indegree scheme weights in-edges as 1/indegree") {
  const LoadedGraph lg = parse_edge_list("a b\nc b\n", WeightScheme::in_degree());
  REQUIRE(lg.graph.edge_count() == 2);
  for (const Edge& e : lg.graph.edges()) CHECK(e.prob == doctest::Approx(0.5));
}

TEST_CASE("dedup keeps the first duplicate; keep-multi keeps both") {
  const std::string text = "a b 0.3\na b 0.3\n";
  CHECK(parse_edge_list(text, WeightScheme::from_file()).graph.edge_count() == 1);

  LoadOptions multi;
  multi.keep_multi = true;
  CHECK(parse_edge_list(text, WeightScheme::from_file(), multi).graph.edge_count() == 2);
}

TEST_CASE("dedup keeps the first probability") {
  const LoadedGraph lg = parse_edge_list("a b 0.3\na b 0.9\n", WeightScheme::from_file());
  REQUIRE(lg.graph.edge_count() == 1);
  CHECK(lg.graph.edge(0).prob == 0.3);
}

TEST_CASE("self-loops drop by default and survive with keep_self_loops") {
  CHECK(parse_edge_list("a a\na b\n", WeightScheme::constant(0.2)).graph.edge_count() == 1);
  LoadOptions keep;
  keep.keep_self_loops = true;
  CHECK(parse_edge_list("a a\na b\n", WeightScheme::constant(0.2), keep).graph.edge_count() == 2);
}

TEST_CASE("symmetrize adds reverse edges") {
  LoadOptions opt;
  opt.symmetrize = true;
  const LoadedGraph lg = parse_edge_list("a b 0.25\n", WeightScheme::from_file(), opt);
  REQUIRE(lg.graph.edge_count() == 2);
  CHECK(lg.graph.edge(0).src == 0);
  CHECK(lg.graph.edge(1).src == 1);
  CHECK(lg.graph.edge(1).prob == 0.25);
}

TEST_CASE("comments and blank lines are ignored") {
  const LoadedGraph lg =
      parse_edge_list("# header\n\na b\n  \n# tail\nb c\n", WeightScheme::constant(0.1));
  CHECK(lg.graph.edge_count() == 2);
}

TEST_CASE("parse errors carry the line number") {
  CHECK_THROWS_WITH_AS(parse_edge_list("a b\nc\n", WeightScheme::constant(0.1)),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("a b 0.5\na c\n", WeightScheme::from_file()),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_edge_list("a b x\n", WeightScheme::from_file()),
                       doctest::Contains("line 1"), ParseError);
}

TEST_CASE("probabilities outside [0,1] are rejected") {
  CHECK_THROWS_AS(parse_edge_list("a b 1.5\n", WeightScheme::from_file()), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("a b -0.1\n", WeightScheme::from_file()), ValidationError);
  CHECK_THROWS_AS(parse_edge_list("a b\n", WeightScheme::constant(2.0)), ValidationError);
}

TEST_CASE("transpose view flips every edge and keeps probabilities") {
  const LoadedGraph lg = parse_edge_list("a b 0.5\nb c 0.7\n", WeightScheme::from_file());
  const TransposeView t = transpose_view(lg.graph);
  REQUIRE(t.out(1).size() == 1);  // b's in-edge (a,b) seen as b->a
  CHECK(t.out(1)[0].node == 0);
  CHECK(t.out(1)[0].prob == 0.5);
  CHECK(t.out(0).empty());
  CHECK(t.in(1).size() == 1);
  CHECK(t.in(1)[0].node == 2);
}

TEST_CASE("empty graph has an empty transpose") {
  const LoadedGraph lg = parse_edge_list("", WeightScheme::constant(0.1));
  CHECK(lg.graph.node_count() == 0);
  CHECK(lg.graph.edge_count() == 0);
  CHECK(transpose_view(lg.graph).edge_count() == 0);
}

TEST_CASE("transpose round-trip preserves the edge multiset") {
  RandomStream rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_gnm(8, 14, 0.0, 1.0, rng.substream(rep));
    std::multiset<std::pair<NodeId, NodeId>> original, round_trip;
    for (const Edge& e : g.edges()) original.insert({e.src, e.dst});
    const TransposeView t(g);
    for (NodeId v = 0; v < t.node_count(); ++v) {
      for (const Arc& a : t.out(v)) round_trip.insert({a.node, v});  // transpose of transpose
    }
    CHECK(original == round_trip);
  }
}

TEST_CASE("dense relabeling is a bijection") {
  const LoadedGraph lg =
      parse_edge_list("x9 n4\nn4 zz\nzz x9\n", WeightScheme::constant(0.3));
  REQUIRE(lg.labels.size() == 3);
  for (NodeId v = 0; v < lg.labels.size(); ++v) CHECK(lg.id_of(lg.labels[v]) == v);
  CHECK(!lg.has_label("missing"));
  CHECK_THROWS_WITH_AS(lg.id_of("missing"), doctest::Contains("missing"), ValidationError);
}

TEST_CASE("indegree weighting holds on random graphs") {
  RandomStream rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const Graph base = random_gnm(9, 16, 0.5, 0.5, rng.substream(rep));
    std::string text;
    for (const Edge& e : base.edges()) {
      text += std::to_string(e.src) + " " + std::to_string(e.dst) + "\n";
    }
    const LoadedGraph lg = parse_edge_list(text, WeightScheme::in_degree());
    const Graph& g = lg.graph;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto in = g.in(v);
      for (const Arc& a : in) {
        CHECK(a.prob == doctest::Approx(1.0 / static_cast<double>(in.size())));
      }
    }
  }
}

TEST_CASE("uniform_random_edge returns the only edge and rejects empty graphs") {
  const Graph one = Graph::from_edges({{0, 1, 0.4}}, 2);
  RandomStream rng(3);
  for (int i = 0; i < 10; ++i) {
    const Edge& e = uniform_random_edge(one, rng);
    CHECK(e.src == 0);
    CHECK(e.dst == 1);
  }
  const Graph empty = Graph::from_edges({}, 2);
  CHECK_THROWS_AS(uniform_random_edge(empty, rng), ValidationError);
}

TEST_CASE("uniform_random_edge frequencies stay within 3 sigma") {
  const Graph g =
      Graph::from_edges({{0, 1, 0.1}, {1, 2, 0.1}, {2, 3, 0.1}, {3, 0, 0.1}}, 4);
  RandomStream rng(12345);
  const int draws = 100000;
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < draws; ++i) {
    const Edge& e = uniform_random_edge(g, rng);
    ++counts[e.src];
  }
  // sd of a single frequency = sqrt(0.25 * 0.75 / draws)
  const double sd = std::sqrt(0.25 * 0.75 / draws);
  for (int c : counts) {
    const double freq = static_cast<double>(c) / draws;
    CHECK(std::abs(freq - 0.25) < 3.0 * sd);
  }
}

TEST_CASE("id map sidecar lists label<TAB>id per line") {
  const LoadedGraph lg = parse_edge_list("u v\nv w\n", WeightScheme::constant(0.1));
  const std::string path = "idmap_test.tsv";
  write_id_map(lg, path);
  std::ifstream is(path);
  std::string line;
  std::getline(is, line);
  CHECK(line == "u\t0");
  std::getline(is, line);
  CHECK(line == "v\t1");
  std::getline(is, line);
  CHECK(line == "w\t2");
  is.close();
  std::remove(path.c_str());
}

TEST_CASE("rng streams are reproducible and substreams differ") {
  RandomStream a(99), b(99);
  for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());

  RandomStream base(99);
  CHECK(base.substream(0).next_u64() != base.substream(1).next_u64());

  RandomStream unit(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = unit.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  RandomStream coin(6);
  for (int i = 0; i < 100; ++i) {
    CHECK(!coin.bernoulli(0.0));
    CHECK(coin.bernoulli(1.0));
  }
}

TEST_SUITE_END();
