#pragma once

#include <span>
#include <string>
#include <vector>

#include "leks/core_index.hpp"
#include "leks/graph.hpp"

namespace leks {

enum class RefineMode { bulk, single };          // ICG-M vs ICG-S deletion
enum class Scorer { weight_sum, weight_max };    // node score over incident edges

struct RefineConfig {
  double epsilon = 0.1;  // fraction of removable nodes deleted per bulk step
  RefineMode mode = RefineMode::bulk;
  Scorer scorer = Scorer::weight_sum;
};

enum class FailKind { none, query_not_in_core, disconnected, depth_exceeded };

struct PhaseStats {
  double tree_ms = 0.0;
  double expand_ms = 0.0;
  double refine_ms = 0.0;
  int iterations = 0;   // successful deletion rounds
  int levels_used = 0;  // expansion depth
  std::vector<std::size_t> level_sizes;  // |L'| after each expansion level
  std::vector<std::size_t> sizes;  // candidate size per iteration, [0] = initial
  std::vector<double> weights;     // candidate weight per iteration
};

struct GroupResult {
  Subgraph group;  // empty when infeasible
  double weight = 0.0;
  bool feasible = false;
  FailKind fail = FailKind::none;
  NodeId fail_a = -1;
  NodeId fail_b = -1;
  PhaseStats stats;

  std::string fail_reason() const;
};

// Smallest superset of Q closed under: a protected node whose induced degree
// in the candidate is exactly k keeps all its candidate neighbors protected.
// Returns sorted internal ids.
std::vector<int> protected_closure(const Subgraph& candidate, std::span<const NodeId> q,
                                   int k);

// One recorded refinement round: what was protected, what was deleted, and
// the surviving candidate.
struct RefineTraceStep {
  std::vector<int> protected_set;
  std::vector<int> deleted;
  std::vector<int> members_after;
};

// Shrinks a feasible candidate toward a small-weight group by deleting the
// highest-scoring unprotected nodes, re-peeling to a connected k-core around
// Q after each batch. An infeasible batch is halved and retried from the
// pre-deletion state; the best feasible candidate seen is returned.
GroupResult refine(const Subgraph& candidate, std::span<const NodeId> q, int k,
                   const RefineConfig& cfg,
                   std::vector<RefineTraceStep>* trace = nullptr);

}  // namespace leks
