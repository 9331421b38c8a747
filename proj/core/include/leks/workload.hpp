#pragma once

#include <cstdint>
#include <vector>

#include "leks/core_index.hpp"
#include "leks/graph.hpp"

namespace leks {

struct WorkloadQuery {
  std::vector<NodeId> q;  // draw order preserved; q[0] anchors path construction
  int k = 1;
};

// Draws `count` query sets of `q_size` distinct nodes, uniformly from the
// nodes with coreness >= k (falling back to all nodes when that pool is too
// small, in which case the queries are simply infeasible and flagged as
// such). Reproducible: the same seed and parameters give the same workload.
std::vector<WorkloadQuery> make_workload(const WeightedGraph& g, const CoreIndex& idx,
                                         int k, int q_size, int count,
                                         std::uint64_t seed);

}  // namespace leks
