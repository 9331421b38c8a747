#include "leks/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace leks {

std::optional<OracleResult> oracle_min_group(const WeightedGraph& g,
                                             std::span<const NodeId> q, int k,
                                             int node_budget) {
  if (q.empty()) throw std::invalid_argument("query set must be non-empty");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (node_budget > 24) throw std::invalid_argument("node_budget capped at 24");
  const int n = g.node_count();
  if (n > node_budget)
    throw BudgetExceeded("graph has " + std::to_string(n) + " nodes, budget is " +
                         std::to_string(node_budget));

  std::uint32_t q_mask = 0;
  for (NodeId id : q) q_mask |= 1u << g.to_internal(id);

  // Adjacency as bitmasks for fast degree/connectivity checks.
  std::vector<std::uint32_t> nbr(n, 0);
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u) {
    for (const auto& [v, wt] : g.adj(u)) {
      nbr[u] |= 1u << v;
      w[u][v] = wt;
    }
  }

  const int free_count = n;
  const std::uint32_t full = free_count == 32 ? ~0u : (1u << free_count) - 1;

  bool found = false;
  double best_weight = 0.0;
  std::vector<int> best_members;

  std::vector<int> members;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if ((mask & q_mask) != q_mask) continue;
    if (std::popcount(mask) < k + 1) continue;

    bool ok = true;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (std::popcount(nbr[v] & mask) < k) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    // Connectivity by bitmask flood fill from the first member.
    std::uint32_t comp = mask & (~mask + 1);
    while (true) {
      std::uint32_t grown = comp;
      for (std::uint32_t rest = comp; rest != 0; rest &= rest - 1)
        grown |= nbr[std::countr_zero(rest)] & mask;
      if (grown == comp) break;
      comp = grown;
    }
    if (comp != mask) continue;

    double weight = 0.0;
    members.clear();
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      members.push_back(v);
      for (std::uint32_t r2 = nbr[v] & mask; r2 != 0; r2 &= r2 - 1) {
        int u = std::countr_zero(r2);
        if (v < u) weight += w[v][u];
      }
    }

    if (!found || weight < best_weight ||
        (weight == best_weight &&
         std::lexicographical_compare(members.begin(), members.end(),
                                      best_members.begin(), best_members.end()))) {
      found = true;
      best_weight = weight;
      best_members = members;
    }
  }

  if (!found) return std::nullopt;
  OracleResult res;
  res.weight = best_weight;
  for (int v : best_members) res.members.push_back(g.to_external(v));
  return res;
}

}  // namespace leks
