#include "leks/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace leks {

std::string GroupResult::fail_reason() const {
  switch (fail) {
    case FailKind::none:
      return "";
    case FailKind::query_not_in_core:
      return "not-in-core:" + std::to_string(fail_a);
    case FailKind::disconnected:
      return "disconnected:" + std::to_string(fail_a) + ":" + std::to_string(fail_b);
    case FailKind::depth_exceeded:
      return "depth-exceeded";
  }
  return "";
}

std::vector<int> protected_closure(const Subgraph& candidate, std::span<const NodeId> q,
                                   int k) {
  const WeightedGraph& g = candidate.parent();
  std::vector<char> prot(g.node_count(), 0);
  std::deque<int> work;
  for (NodeId id : q) {
    int v = g.to_internal(id);
    if (!candidate.contains(v)) throw UnknownNode(id);
    if (!prot[v]) {
      prot[v] = 1;
      work.push_back(v);
    }
  }
  while (!work.empty()) {
    int p = work.front();
    work.pop_front();
    if (candidate.degree(p) != k) continue;
    for (const auto& [u, w] : g.adj(p)) {
      (void)w;
      if (candidate.contains(u) && !prot[u]) {
        prot[u] = 1;
        work.push_back(u);
      }
    }
  }
  std::vector<int> out;
  for (int v : candidate.members())
    if (prot[v]) out.push_back(v);
  return out;
}

namespace {

double candidate_weight(const WeightedGraph& g, const std::vector<int>& members) {
  return group_weight(Subgraph(g, members));
}

}  // namespace

GroupResult refine(const Subgraph& candidate, std::span<const NodeId> q, int k,
                   const RefineConfig& cfg, std::vector<RefineTraceStep>* trace) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
    throw std::invalid_argument("epsilon must be in (0,1)");
  const WeightedGraph& g = candidate.parent();

  std::vector<int> qi;
  for (NodeId id : q) {
    int v = g.to_internal(id);
    if (!candidate.contains(v)) throw InfeasibleInput("candidate does not contain query node " + std::to_string(id));
    qi.push_back(v);
  }
  for (int v : candidate.members()) {
    if (candidate.degree(v) < k)
      throw InfeasibleInput("candidate is not a k-core");
  }
  if (!candidate.empty()) {
    std::vector<int> comp = component_members(g, candidate.members(), candidate.members()[0]);
    if (comp.size() != candidate.size())
      throw InfeasibleInput("candidate is not connected");
  }

  std::vector<int> cur = candidate.members();
  double cur_weight = candidate_weight(g, cur);
  std::vector<int> best = cur;
  double best_weight = cur_weight;

  GroupResult result;
  result.stats.sizes.push_back(cur.size());
  result.stats.weights.push_back(cur_weight);

  while (true) {
    Subgraph sub(g, cur);
    std::vector<int> prot = protected_closure(sub, q, k);
    std::vector<char> is_prot(g.node_count(), 0);
    for (int v : prot) is_prot[v] = 1;

    std::vector<int> unprotected;
    for (int v : cur)
      if (!is_prot[v]) unprotected.push_back(v);
    if (unprotected.empty()) break;

    // Score over induced incident edges.
    std::unordered_map<int, double> score;
    for (int v : unprotected) score.emplace(v, 0.0);
    sub.each_edge([&](int a, int b, double w) {
      for (int v : {a, b}) {
        auto it = score.find(v);
        if (it == score.end()) continue;
        if (cfg.scorer == Scorer::weight_sum)
          it->second += w;
        else
          it->second = std::max(it->second, w);
      }
    });
    std::sort(unprotected.begin(), unprotected.end(), [&](int a, int b) {
      double sa = score.at(a), sb = score.at(b);
      if (sa != sb) return sa > sb;
      return a > b;  // equal scores: larger node id deleted first
    });

    std::size_t batch = cfg.mode == RefineMode::single
                            ? 1
                            : static_cast<std::size_t>(
                                  std::ceil(cfg.epsilon * static_cast<double>(unprotected.size())));
    batch = std::max<std::size_t>(batch, 1);

    bool advanced = false;
    while (true) {
      std::vector<char> doomed(g.node_count(), 0);
      for (std::size_t i = 0; i < batch; ++i) doomed[unprotected[i]] = 1;
      std::vector<int> survivors;
      for (int v : cur)
        if (!doomed[v]) survivors.push_back(v);

      auto next = connected_kcore_containing(g, survivors, qi, k);
      if (next) {
        if (trace) {
          RefineTraceStep step;
          step.protected_set = prot;
          step.deleted.assign(unprotected.begin(), unprotected.begin() + batch);
          step.members_after = *next;
          trace->push_back(std::move(step));
        }
        cur = std::move(*next);
        cur_weight = candidate_weight(g, cur);
        ++result.stats.iterations;
        result.stats.sizes.push_back(cur.size());
        result.stats.weights.push_back(cur_weight);
        if (cur_weight < best_weight) {
          best = cur;
          best_weight = cur_weight;
        }
        advanced = true;
        break;
      }
      if (batch == 1) break;
      batch /= 2;
    }
    if (!advanced) break;  // even a single deletion breaks feasibility
  }

  result.group = Subgraph(g, best);
  result.weight = best_weight;
  result.feasible = true;
  return result;
}

}  // namespace leks
