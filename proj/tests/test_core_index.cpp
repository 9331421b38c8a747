#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "leks/core_index.hpp"
#include "leks/generator.hpp"

using namespace leks;
using namespace testutil;

TEST_CASE("a clique peels at degree n-1") {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = u + 1; v < 5; ++v) edges.push_back({u, v, 1.0});
  WeightedGraph g = WeightedGraph::from_edges(edges);
  CoreIndex idx = core_decompose(g);
  for (int v = 0; v < 5; ++v) CHECK(idx.coreness_of_internal(v) == 4);
  CHECK(idx.delta_max == 4);
}

TEST_CASE("a path has coreness 1 everywhere") {
  WeightedGraph g = from_triples({{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CoreIndex idx = core_decompose(g);
  for (int v = 0; v < 4; ++v) CHECK(idx.coreness_of_internal(v) == 1);
}

TEST_CASE("core decomposition matches per-k fixpoint deletion") {
  for (int trial = 0; trial < 40; ++trial) {
    double p = trial % 4 == 0 ? 0.5 : (trial % 4 == 1 ? 0.25 : (trial % 4 == 2 ? 0.1 : 0.05));
    int n = 12 + (trial * 7) % 49;
    auto edges = gen_gnp(n, p, 900 + trial, WeightSpec{});
    WeightedGraph g = WeightedGraph::from_edges(edges);
    if (g.empty()) continue;
    CoreIndex idx = core_decompose(g);
    std::vector<int> expect = naive_coreness(g);
    for (int v = 0; v < g.node_count(); ++v) CHECK(idx.coreness_of_internal(v) == expect[v]);
    CHECK(idx.coreness.size() == static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
      CHECK(idx.coreness_of_internal(v) <= g.degree(v));
  }
}

TEST_CASE("save/load round-trips the index") {
  TempDir tmp;
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  save_index(idx, tmp.file("g.idx"));
  CoreIndex back = load_index(tmp.file("g.idx"));
  CHECK(back == idx);
}

TEST_CASE("empty graph round-trips as a header-only file") {
  TempDir tmp;
  WeightedGraph g = WeightedGraph::from_edges({});
  CoreIndex idx = core_decompose(g);
  save_index(idx, tmp.file("e.idx"));
  CoreIndex back = load_index(tmp.file("e.idx"));
  CHECK(back == idx);
  CHECK(back.size() == 0);
}

TEST_CASE("a hand-written index file loads") {
  TempDir tmp;
  write_file(tmp.file("h.idx"), "#coreness v1 00000000deadbeef\n5 2\n7 1\n9 3\n");
  CoreIndex idx = load_index(tmp.file("h.idx"));
  REQUIRE(idx.size() == 3);
  CHECK(idx.coreness_of(5) == 2);
  CHECK(idx.coreness_of(7) == 1);
  CHECK(idx.coreness_of(9) == 3);
  CHECK(idx.delta_max == 3);
  CHECK(idx.graph_hash == 0xdeadbeefull);
}

TEST_CASE("index format errors") {
  TempDir tmp;
  write_file(tmp.file("bad1.idx"), "nonsense\n");
  CHECK_THROWS_AS(load_index(tmp.file("bad1.idx")), FormatError);
  write_file(tmp.file("bad2.idx"), "#coreness v1 00ff\n9 1\n5 1\n");  // unsorted
  CHECK_THROWS_AS(load_index(tmp.file("bad2.idx")), FormatError);
  write_file(tmp.file("bad3.idx"), "#coreness v1 00ff\n5 x\n");
  CHECK_THROWS_AS(load_index(tmp.file("bad3.idx")), FormatError);
  CHECK_THROWS_AS(load_index(tmp.file("missing.idx")), IoError);
}

TEST_CASE("a mismatched index is rejected at query time") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  idx.graph_hash ^= 1;
  CHECK_THROWS_AS(kcore_of(g, idx, 1), FormatError);
}

TEST_CASE("kcore_of") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  CHECK(idx.delta_max == 3);

  CHECK(kcore_of(g, idx, 0).size() == 12);
  CHECK(kcore_of(g, idx, idx.delta_max + 1).empty());

  Subgraph core3 = kcore_of(g, idx, 3);
  CHECK(core3.member_ids() == std::vector<NodeId>{1, 2, 3, 4, 7, 8, 9, 10, 11, 12});
  CHECK(count_components(g, core3.members()) == 2);
}

TEST_CASE("maximal_connected_kcore finds the query component") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);

  Subgraph comp = maximal_connected_kcore(g, idx, std::vector<NodeId>{8, 10}, 3);
  CHECK(comp.member_ids() == std::vector<NodeId>{7, 8, 9, 10, 11, 12});

  // v5 has coreness 2, so k=3 names it as the offender.
  try {
    maximal_connected_kcore(g, idx, std::vector<NodeId>{8, 5}, 3);
    FAIL("expected QueryNotInCore");
  } catch (const QueryNotInCore& e) {
    CHECK(e.node == 5);
  }

  // Query nodes in different components of the 3-core.
  try {
    maximal_connected_kcore(g, idx, std::vector<NodeId>{1, 8}, 3);
    FAIL("expected Disconnected");
  } catch (const Disconnected& e) {
    CHECK(e.a == 1);
    CHECK(e.b == 8);
  }
}

TEST_CASE("two disjoint triangles disconnect a spanning query") {
  WeightedGraph g = from_triples({{0, 1, 1}, {1, 2, 1}, {0, 2, 1},
                                  {5, 6, 1}, {6, 7, 1}, {5, 7, 1}});
  CoreIndex idx = core_decompose(g);
  CHECK_THROWS_AS(maximal_connected_kcore(g, idx, std::vector<NodeId>{0, 5}, 2),
                  Disconnected);
}

TEST_CASE("cores are nested and have min induced degree k") {
  for (int trial = 0; trial < 10; ++trial) {
    auto edges = gen_gnp(40, 0.15, 1500 + trial, WeightSpec{});
    WeightedGraph g = WeightedGraph::from_edges(edges);
    if (g.empty()) continue;
    CoreIndex idx = core_decompose(g);
    for (int k = 0; k <= idx.delta_max; ++k) {
      Subgraph outer = kcore_of(g, idx, k);
      Subgraph inner = kcore_of(g, idx, k + 1);
      std::set<int> out_set(outer.members().begin(), outer.members().end());
      for (int v : inner.members()) CHECK(out_set.count(v) == 1);
      for (int v : outer.members()) CHECK(outer.degree(v) >= k);
    }
  }
}

TEST_CASE("maximal_connected_kcore output is connected, contains Q, min degree k") {
  for (int trial = 0; trial < 10; ++trial) {
    auto edges = gen_gnp(30, 0.25, 1600 + trial, WeightSpec{});
    WeightedGraph g = WeightedGraph::from_edges(edges);
    if (g.node_count() < 4) continue;
    CoreIndex idx = core_decompose(g);
    NodeId q0 = g.to_external(trial % g.node_count());
    int k = idx.coreness_of(q0);
    if (k == 0) continue;
    Subgraph comp = maximal_connected_kcore(g, idx, std::vector<NodeId>{q0}, k);
    CHECK(is_connected_kcore_with(g, comp.members(), {q0}, k));
  }
}
