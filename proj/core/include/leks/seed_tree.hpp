#pragma once

#include <map>
#include <span>
#include <vector>

#include "leks/core_index.hpp"
#include "leks/graph.hpp"

namespace leks {

struct ShortestPath {
  std::vector<NodeId> nodes;  // source .. target, external ids
  double weight = 0.0;
};

// Small-weight tree connecting all query nodes inside the k-core. Node and
// edge endpoints are internal ids of the graph the tree was built on.
struct SeedTree {
  std::vector<int> nodes;                           // sorted
  std::vector<std::tuple<int, int, double>> edges;  // u < v, sorted
  double total_weight = 0.0;
};

// Single-source shortest paths within an induced subgraph. Unreachable
// targets are absent from the map. Deterministic: among equal-weight
// relaxations the predecessor with the smaller node id wins, and equal
// distances are settled in ascending node id order.
std::map<NodeId, ShortestPath> dijkstra_sssp(const Subgraph& universe, NodeId source,
                                             std::span<const NodeId> targets);

// Tree construction over the union of all query-pair shortest paths: the
// paths are merged into a weighted graph and a Prim-style growth from the
// first query node extracts a spanning tree, stopped once every query node
// is connected and stripped of branches that serve no query node.
SeedTree build_tree_mst(const WeightedGraph& g, const CoreIndex& idx,
                        std::span<const NodeId> q, int k);

// Path-based construction: repeatedly connect the current anchor to the
// nearest remaining query node by shortest path, moving the anchor to it.
// Cycles created by merging are pruned by dropping the heaviest edge on
// each cycle.
SeedTree build_tree_path(const WeightedGraph& g, const CoreIndex& idx,
                         std::span<const NodeId> q, int k);

}  // namespace leks
