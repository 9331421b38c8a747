#include "leks/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "leks/expansion.hpp"
#include "leks/seed_tree.hpp"

namespace leks {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void validate(const QuerySpec& spec) {
  if (spec.q.empty()) throw std::invalid_argument("query set must be non-empty");
  if (spec.k < 1) throw std::invalid_argument("k must be >= 1");
  if (!(spec.refine.epsilon > 0.0 && spec.refine.epsilon < 1.0))
    throw std::invalid_argument("epsilon must be in (0,1)");
  std::vector<NodeId> sorted = spec.q;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("query set must not contain duplicates");
}

GroupResult infeasible(FailKind kind, NodeId a, NodeId b, PhaseStats stats) {
  GroupResult r;
  r.feasible = false;
  r.fail = kind;
  r.fail_a = a;
  r.fail_b = b;
  r.stats = std::move(stats);
  return r;
}

}  // namespace

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::tree_mst:
      return "tree-mst";
    case Strategy::tree_path:
      return "tree-path";
    case Strategy::global_icgm:
      return "global-icgm";
    case Strategy::global_icgs:
      return "global-icgs";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "tree-mst") return Strategy::tree_mst;
  if (name == "tree-path") return Strategy::tree_path;
  if (name == "global-icgm") return Strategy::global_icgm;
  if (name == "global-icgs") return Strategy::global_icgs;
  return std::nullopt;
}

GroupResult leks_search(const WeightedGraph& g, const CoreIndex& idx,
                        const QuerySpec& spec) {
  validate(spec);
  PhaseStats stats;
  try {
    // Phase 1: seed tree, skipped for a single query node.
    std::vector<int> seed;
    auto t0 = Clock::now();
    if (spec.q.size() >= 2) {
      SeedTree tree = spec.strategy == Strategy::tree_mst
                          ? build_tree_mst(g, idx, spec.q, spec.k)
                          : build_tree_path(g, idx, spec.q, spec.k);
      seed = tree.nodes;
      stats.tree_ms = ms_since(t0);
    } else {
      int v = g.to_internal(spec.q[0]);
      if (idx.coreness_of_internal(v) < spec.k) throw QueryNotInCore(spec.q[0], spec.k);
      seed.push_back(v);
    }

    // Phase 2: tree-to-graph expansion.
    ExpansionStats exp;
    t0 = Clock::now();
    Subgraph candidate = expand_to_kcore(g, idx, spec.q, spec.k, seed, spec.max_depth, &exp);
    stats.expand_ms = ms_since(t0);
    stats.levels_used = exp.levels_used;
    stats.level_sizes = std::move(exp.frontier_sizes);

    // Phase 3: refinement.
    t0 = Clock::now();
    GroupResult result = refine(candidate, spec.q, spec.k, spec.refine);
    stats.refine_ms = ms_since(t0);
    stats.iterations = result.stats.iterations;
    stats.sizes = std::move(result.stats.sizes);
    stats.weights = std::move(result.stats.weights);
    result.stats = std::move(stats);
    return result;
  } catch (const QueryNotInCore& e) {
    return infeasible(FailKind::query_not_in_core, e.node, -1, std::move(stats));
  } catch (const Disconnected& e) {
    return infeasible(FailKind::disconnected, e.a, e.b, std::move(stats));
  } catch (const DepthExceeded& e) {
    (void)e;
    return infeasible(FailKind::depth_exceeded, -1, -1, std::move(stats));
  }
}

GroupResult global_baseline(const WeightedGraph& g, const CoreIndex& idx,
                            const QuerySpec& spec) {
  validate(spec);
  PhaseStats stats;
  RefineConfig cfg = spec.refine;
  cfg.mode = spec.strategy == Strategy::global_icgs ? RefineMode::single : RefineMode::bulk;
  try {
    auto t0 = Clock::now();
    Subgraph candidate = maximal_connected_kcore(g, idx, spec.q, spec.k);
    stats.expand_ms = ms_since(t0);

    t0 = Clock::now();
    GroupResult result = refine(candidate, spec.q, spec.k, cfg);
    stats.refine_ms = ms_since(t0);
    stats.iterations = result.stats.iterations;
    stats.sizes = std::move(result.stats.sizes);
    stats.weights = std::move(result.stats.weights);
    result.stats = std::move(stats);
    return result;
  } catch (const QueryNotInCore& e) {
    return infeasible(FailKind::query_not_in_core, e.node, -1, std::move(stats));
  } catch (const Disconnected& e) {
    return infeasible(FailKind::disconnected, e.a, e.b, std::move(stats));
  }
}

GroupResult run_query(const WeightedGraph& g, const CoreIndex& idx, const QuerySpec& spec) {
  switch (spec.strategy) {
    case Strategy::tree_mst:
    case Strategy::tree_path:
      return leks_search(g, idx, spec);
    case Strategy::global_icgm:
    case Strategy::global_icgs:
      return global_baseline(g, idx, spec);
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace leks
