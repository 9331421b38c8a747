#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "leks/errors.hpp"

namespace leks {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double w = 0.0;
};

// Undirected simple graph with strictly positive edge weights. External ids
// are arbitrary non-negative 64-bit integers; internally they are remapped to
// [0, n) in ascending external-id order, so any ordering by internal id is
// also an ordering by external id. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  // Builds from an edge list. Duplicate (u,v) pairs collapse to the minimum
  // weight, self-loops are dropped (counted), weights must be > 0.
  static WeightedGraph from_edges(std::span<const Edge> edges);

  int node_count() const { return static_cast<int>(external_.size()); }
  std::size_t edge_count() const { return m_; }
  bool empty() const { return external_.empty(); }

  bool has_node(NodeId id) const { return lookup_.find(id) != lookup_.end(); }
  int to_internal(NodeId id) const;
  NodeId to_external(int v) const { return external_[v]; }
  const std::vector<NodeId>& node_ids() const { return external_; }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  // Adjacency of internal node v, sorted by neighbor id.
  std::span<const std::pair<int, double>> adj(int v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  // Weight of internal edge (u,v); throws UnknownNode if absent.
  double edge_weight(int u, int v) const;
  bool has_edge(int u, int v) const;

  // Neighbors of an external node id with weights, sorted by neighbor id.
  std::vector<std::pair<NodeId, double>> neighbors(NodeId v) const;

  // Full edge list in canonical order (u < v, sorted), external ids.
  std::vector<Edge> edges() const;
  double total_weight() const;

  int self_loops_dropped() const { return self_loops_; }
  // Hash of the canonical node and edge lists; identifies graph content
  // independent of file formatting.
  std::uint64_t content_hash() const { return hash_; }

 private:
  std::vector<NodeId> external_;            // internal -> external, ascending
  std::unordered_map<NodeId, int> lookup_;  // external -> internal
  // Adjacency in compressed sparse rows, each row sorted by neighbor id.
  std::vector<int> offsets_{0};
  std::vector<std::pair<int, double>> nbrs_;
  std::size_t m_ = 0;
  int self_loops_ = 0;
  std::uint64_t hash_ = 0;
};

// Parses an edge-list file: one "u v w" per line, '#' lines are comments.
WeightedGraph load_graph(const std::string& path);

// Node-induced subgraph of a WeightedGraph: the edge set is implied as all
// parent edges with both endpoints in the member set. Holds a reference to
// the parent graph, which must outlive the subgraph.
class Subgraph {
 public:
  Subgraph() = default;
  Subgraph(const WeightedGraph& parent, std::vector<int> members);

  const WeightedGraph& parent() const { return *parent_; }
  // Member internal ids, sorted ascending.
  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(int v) const {
    return v >= 0 && v < static_cast<int>(in_.size()) && in_[v] != 0;
  }
  // Induced degree of member v.
  int degree(int v) const;
  std::size_t edge_count() const;

  // Visits every induced edge once as f(u, v, w) with u < v.
  template <typename F>
  void each_edge(F&& f) const {
    for (int u : members_) {
      for (const auto& [v, w] : parent_->adj(u)) {
        if (u < v && contains(v)) f(u, v, w);
      }
    }
  }

  std::vector<NodeId> member_ids() const;  // external ids, sorted

 private:
  const WeightedGraph* parent_ = nullptr;
  std::vector<int> members_;
  std::vector<char> in_;
};

// Sum of all induced edge weights of h.
double group_weight(const Subgraph& h);

Subgraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> members);
Subgraph induced_subgraph_internal(const WeightedGraph& g, std::vector<int> members);

// Maximal connected node set of h containing v (breadth-first over induced
// edges).
Subgraph connected_component_containing(const Subgraph& h, NodeId v);

// BFS within an induced member set, internal ids; used by the query phases.
std::vector<int> component_members(const WeightedGraph& g, std::span<const int> members,
                                   int start);

}  // namespace leks
