#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "leks/expansion.hpp"
#include "leks/generator.hpp"
#include "leks/seed_tree.hpp"

using namespace leks;
using namespace testutil;

TEST_CASE("one level of expansion reaches the 3-core around the query pair") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  std::vector<NodeId> q{8, 10};
  SeedTree tree = build_tree_path(g, idx, q, 3);

  ExpansionStats stats;
  Subgraph cand = expand_to_kcore(g, idx, q, 3, tree.nodes, std::nullopt, &stats);
  CHECK(cand.member_ids() == std::vector<NodeId>{8, 9, 10, 11});
  CHECK(stats.levels_used == 1);
  REQUIRE(stats.frontier_sizes.size() == 2);
  CHECK(stats.frontier_sizes[0] == 2);
  CHECK(stats.frontier_sizes[1] == 4);
  CHECK(stats.candidate_size == 4);
}

TEST_CASE("a seed that is already a connected k-core returns unchanged at depth 0") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  std::vector<NodeId> q{8, 10};
  std::vector<int> seed;
  for (NodeId id : {8, 9, 10, 11}) seed.push_back(g.to_internal(id));

  ExpansionStats stats;
  Subgraph cand = expand_to_kcore(g, idx, q, 3, seed, std::nullopt, &stats);
  CHECK(cand.member_ids() == std::vector<NodeId>{8, 9, 10, 11});
  CHECK(stats.levels_used == 0);
}

TEST_CASE("expansion output is feasible and bounded by the maximal component") {
  for (int trial = 0; trial < 30; ++trial) {
    auto edges = gen_gnp(30, 0.25, 6000 + trial, WeightSpec{});
    WeightedGraph g = WeightedGraph::from_edges(edges);
    CoreIndex idx = core_decompose(g);
    int k = 2 + trial % 2;
    if (idx.delta_max < k) continue;
    Subgraph core = kcore_of(g, idx, k);
    if (core.size() < 3) continue;
    std::vector<NodeId> q{g.to_external(core.members()[0]),
                          g.to_external(core.members()[core.size() - 1])};

    Subgraph comp;
    SeedTree tree;
    try {
      comp = maximal_connected_kcore(g, idx, q, k);
      tree = build_tree_path(g, idx, q, k);
    } catch (const Error&) {
      continue;
    }
    ExpansionStats stats;
    Subgraph cand = expand_to_kcore(g, idx, q, k, tree.nodes, std::nullopt, &stats);

    CHECK(is_connected_kcore_with(g, cand.members(), q, k));
    CHECK(cand.size() <= comp.size());
    std::set<int> comp_set(comp.members().begin(), comp.members().end());
    for (int v : cand.members()) CHECK(comp_set.count(v) == 1);

    // Monotone growth of the accumulated set.
    for (std::size_t i = 1; i < stats.frontier_sizes.size(); ++i)
      CHECK(stats.frontier_sizes[i] > stats.frontier_sizes[i - 1]);
  }
}

TEST_CASE("expansion is deterministic") {
  WeightedGraph g = blocks_chain_graph(6);
  CoreIndex idx = core_decompose(g);
  std::vector<NodeId> q{0, 1};
  std::vector<int> seed{g.to_internal(0), g.to_internal(1)};

  ExpansionStats s1, s2;
  Subgraph a = expand_to_kcore(g, idx, q, 3, seed, std::nullopt, &s1);
  Subgraph b = expand_to_kcore(g, idx, q, 3, seed, std::nullopt, &s2);
  CHECK(a.members() == b.members());
  CHECK(s1.levels_used == s2.levels_used);
  CHECK(s1.frontier_sizes == s2.frontier_sizes);
}

TEST_CASE("expansion respects the depth limit") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  std::vector<NodeId> q{8, 10};
  SeedTree tree = build_tree_path(g, idx, q, 3);
  CHECK_THROWS_AS(expand_to_kcore(g, idx, q, 3, tree.nodes, 0), DepthExceeded);
  CHECK(expand_to_kcore(g, idx, q, 3, tree.nodes, 1).size() == 4);
}

TEST_CASE("a seed spanning two core components splits the query") {
  // {1..4} and {7..12} are separate 3-core components; a seed straddling
  // them exhausts the frontier without ever holding Q together.
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  std::vector<int> seed{g.to_internal(1), g.to_internal(8)};
  CHECK_THROWS_AS(expand_to_kcore(g, idx, std::vector<NodeId>{1, 8}, 3, seed), QuerySplit);
}

TEST_CASE("expansion validates its seed") {
  WeightedGraph g = fig1_graph();
  CoreIndex idx = core_decompose(g);
  std::vector<int> seed{g.to_internal(8)};
  // Seed missing a query node.
  CHECK_THROWS_AS(expand_to_kcore(g, idx, std::vector<NodeId>{8, 10}, 3, seed),
                  std::invalid_argument);
  // Seed node below the required coreness.
  std::vector<int> low{g.to_internal(5)};
  CHECK_THROWS_AS(expand_to_kcore(g, idx, std::vector<NodeId>{5}, 3, low), QueryNotInCore);
}
