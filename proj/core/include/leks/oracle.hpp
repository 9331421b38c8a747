#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leks/graph.hpp"

namespace leks {

struct OracleResult {
  double weight = 0.0;
  std::vector<NodeId> members;  // sorted external ids
};

// Exact minimum-weight connected k-core containing Q, by enumerating every
// node subset. Only runs on graphs with at most node_budget (<= 24) nodes;
// ties resolve to the lexicographically smallest member set. Returns nullopt
// when no feasible group exists.
std::optional<OracleResult> oracle_min_group(const WeightedGraph& g,
                                             std::span<const NodeId> q, int k,
                                             int node_budget = 16);

}  // namespace leks
