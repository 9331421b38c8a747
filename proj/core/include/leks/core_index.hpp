#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leks/graph.hpp"

namespace leks {

// Offline coreness index: for every node the largest k such that the node
// belongs to a connected k-core. Built once per graph and immutable at query
// time; the stored graph hash ties an index to the graph content it was
// computed from.
struct CoreIndex {
  std::vector<NodeId> nodes;   // external ids, ascending (graph internal order)
  std::vector<int> coreness;   // aligned with nodes
  int delta_max = 0;
  std::uint64_t graph_hash = 0;

  std::size_t size() const { return nodes.size(); }
  bool matches(const WeightedGraph& g) const { return graph_hash == g.content_hash(); }
  // Coreness by internal id; only valid when matches(g) for the graph that
  // assigned the ids.
  int coreness_of_internal(int v) const { return coreness[v]; }
  int coreness_of(NodeId id) const;  // by external id, binary search

  bool operator==(const CoreIndex&) const = default;
};

// Core decomposition by degree peeling (bucket queue, O(n + m)).
CoreIndex core_decompose(const WeightedGraph& g);

// Index file: "#coreness v1 <hash>" header, then "nodeId coreness" per line
// sorted by external node id.
void save_index(const CoreIndex& idx, const std::string& path);
CoreIndex load_index(const std::string& path);

// Induced subgraph on all nodes with coreness >= k; may be empty.
Subgraph kcore_of(const WeightedGraph& g, const CoreIndex& idx, int k);

// The connected component of the k-core containing every query node.
// Throws QueryNotInCore if some q has coreness < k, Disconnected if two
// query nodes fall in different components.
Subgraph maximal_connected_kcore(const WeightedGraph& g, const CoreIndex& idx,
                                 std::span<const NodeId> q, int k);

// Peels the induced subgraph on `members` down to its k-core; returns the
// surviving members, sorted.
std::vector<int> kcore_members(const WeightedGraph& g, std::span<const int> members,
                               int k);

// Connected k-core of the induced subgraph on `members` that contains every
// node of q_internal, or nullopt if peeling removes a query node or the
// query nodes end up in different components.
std::optional<std::vector<int>> connected_kcore_containing(const WeightedGraph& g,
                                                           std::span<const int> members,
                                                           std::span<const int> q_internal,
                                                           int k);

}  // namespace leks
