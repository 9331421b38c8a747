#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leks/core_index.hpp"
#include "leks/refinement.hpp"

namespace leks {

enum class Strategy { tree_mst, tree_path, global_icgm, global_icgs };

const char* strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

struct QuerySpec {
  std::vector<NodeId> q;  // ordered; the first node anchors path construction
  int k = 1;
  Strategy strategy = Strategy::tree_path;
  RefineConfig refine;
  std::optional<int> max_depth;  // expansion depth limit, unlimited by default
};

// Local-exploration search: seed tree (skipped for |Q| = 1), tree-to-graph
// expansion, then refinement. Infeasible queries come back as a feasible =
// false result carrying the typed reason, never as an exception.
GroupResult leks_search(const WeightedGraph& g, const CoreIndex& idx,
                        const QuerySpec& spec);

// Global baseline: the maximal connected k-core containing Q refined with
// bulk (ICG-M) or single-node (ICG-S) deletion.
GroupResult global_baseline(const WeightedGraph& g, const CoreIndex& idx,
                            const QuerySpec& spec);

// Dispatches on spec.strategy.
GroupResult run_query(const WeightedGraph& g, const CoreIndex& idx, const QuerySpec& spec);

}  // namespace leks
