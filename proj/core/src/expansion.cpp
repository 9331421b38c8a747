#include "leks/expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace leks {

Subgraph expand_to_kcore(const WeightedGraph& g, const CoreIndex& idx,
                         std::span<const NodeId> q, int k,
                         std::span<const int> seed_members,
                         std::optional<int> max_depth, ExpansionStats* stats) {
  if (q.empty()) throw std::invalid_argument("query set must be non-empty");
  if (!idx.matches(g)) throw FormatError("core index does not match the graph content");

  std::vector<int> qi;
  for (NodeId id : q) qi.push_back(g.to_internal(id));

  std::vector<char> in_q(g.node_count(), 0);
  for (int v : qi) in_q[v] = 1;
  for (int v : seed_members) {
    if (idx.coreness_of_internal(v) < k)
      throw QueryNotInCore(g.to_external(v), k);
    in_q[v] = 2;  // mark covered
  }
  for (int v : qi)
    if (in_q[v] != 2) throw std::invalid_argument("seed must contain every query node");

  std::vector<char> accumulated(g.node_count(), 0);
  std::vector<int> level(seed_members.begin(), seed_members.end());
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
  std::vector<int> all(level);
  for (int v : level) accumulated[v] = 1;

  ExpansionStats local;
  ExpansionStats& st = stats ? *stats : local;
  st = ExpansionStats{};
  st.frontier_sizes.push_back(all.size());

  int depth = 0;
  while (true) {
    if (auto comp = connected_kcore_containing(g, all, qi, k)) {
      st.levels_used = depth;
      st.candidate_size = comp->size();
      return Subgraph(g, std::move(*comp));
    }
    if (max_depth && depth >= *max_depth) throw DepthExceeded(*max_depth);

    // Next frontier: unvisited neighbors that stay inside the k-core,
    // processed in ascending node id.
    std::vector<int> next;
    for (int v : level) {
      for (const auto& [u, w] : g.adj(v)) {
        (void)w;
        if (!accumulated[u] && idx.coreness_of_internal(u) >= k) {
          accumulated[u] = 1;
          next.push_back(u);
        }
      }
    }
    std::sort(next.begin(), next.end());
    if (next.empty()) throw QuerySplit();  // full component reached, still infeasible

    all.insert(all.end(), next.begin(), next.end());
    std::sort(all.begin(), all.end());
    level = std::move(next);
    ++depth;
    st.frontier_sizes.push_back(all.size());
  }
}

}  // namespace leks
