#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leks/core_index.hpp"
#include "leks/graph.hpp"

namespace leks {

struct ExpansionStats {
  int levels_used = 0;                       // depth at which extraction succeeded
  std::vector<std::size_t> frontier_sizes;   // |L'| after each level, [0] = seed
  std::size_t candidate_size = 0;
};

// Grows the seed node set level by level along neighbors inside the k-core
// until the induced subgraph contains a connected k-core spanning Q, and
// returns that k-core. Every seed node must have coreness >= k and Q must be
// contained in the seed. Throws DepthExceeded when max_depth levels were
// added without success, QuerySplit if even the fully expanded set cannot
// hold the query nodes together.
Subgraph expand_to_kcore(const WeightedGraph& g, const CoreIndex& idx,
                         std::span<const NodeId> q, int k,
                         std::span<const int> seed_members,
                         std::optional<int> max_depth = std::nullopt,
                         ExpansionStats* stats = nullptr);

}  // namespace leks
