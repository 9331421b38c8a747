#include "leks/workload.hpp"

#include <algorithm>
#include <stdexcept>

#include "leks/rng.hpp"

namespace leks {

std::vector<WorkloadQuery> make_workload(const WeightedGraph& g, const CoreIndex& idx,
                                         int k, int q_size, int count,
                                         std::uint64_t seed) {
  if (q_size < 1) throw std::invalid_argument("q_size must be >= 1");
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  if (!idx.matches(g)) throw FormatError("core index does not match the graph content");

  std::vector<NodeId> pool;
  for (int v = 0; v < g.node_count(); ++v)
    if (idx.coreness_of_internal(v) >= k) pool.push_back(g.to_external(v));
  if (static_cast<int>(pool.size()) < q_size) pool = g.node_ids();
  if (static_cast<int>(pool.size()) < q_size)
    throw std::invalid_argument("graph has fewer nodes than q_size");

  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(q_size)));
  std::vector<WorkloadQuery> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    WorkloadQuery wq;
    wq.k = k;
    while (static_cast<int>(wq.q.size()) < q_size) {
      NodeId cand = pool[rng.below(pool.size())];
      if (std::find(wq.q.begin(), wq.q.end(), cand) == wq.q.end())
        wq.q.push_back(cand);
    }
    out.push_back(std::move(wq));
  }
  return out;
}

}  // namespace leks
