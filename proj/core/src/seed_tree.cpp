#include "leks/seed_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace leks {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SsspResult {
  std::vector<double> dist;
  std::vector<int> parent;
  int first_target = -1;  // first settled target in StopMode::any
};

enum class StopMode { all, any };

// Dijkstra over the nodes flagged in `in`, sized to the parent graph. With a
// non-empty target set the search stops once all targets are settled, or at
// the first settled target in StopMode::any; settled distances are final, so
// the early exit does not change any reported path. Settling order is
// (distance, node id), which makes "the nearest target, ties by smaller id"
// exactly the first target settled.
SsspResult sssp(const WeightedGraph& g, const std::vector<char>& in, int source,
                std::span<const int> targets = {}, StopMode mode = StopMode::all) {
  const int n = g.node_count();
  SsspResult res{std::vector<double>(n, kInf), std::vector<int>(n, -1), -1};
  std::vector<char> settled(n, 0);
  std::vector<char> is_target(n, 0);
  int outstanding = 0;
  for (int t : targets) {
    if (!is_target[t]) {
      is_target[t] = 1;
      ++outstanding;
    }
  }

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  res.dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (settled[v]) continue;
    settled[v] = 1;
    if (is_target[v]) {
      if (res.first_target == -1) res.first_target = v;
      if (mode == StopMode::any || --outstanding == 0) break;
    }
    for (const auto& [u, w] : g.adj(v)) {
      if (!in[u] || settled[u]) continue;
      double nd = d + w;
      if (nd < res.dist[u]) {
        res.dist[u] = nd;
        res.parent[u] = v;
        pq.push({nd, u});
      } else if (nd == res.dist[u] && v < res.parent[u]) {
        res.parent[u] = v;
      }
    }
  }
  return res;
}

std::vector<int> backtrack(const SsspResult& res, int source, int target) {
  std::vector<int> path;
  for (int v = target; v != -1; v = res.parent[v]) {
    path.push_back(v);
    if (v == source) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<char> member_bitmap(const WeightedGraph& g, std::span<const int> members) {
  std::vector<char> in(g.node_count(), 0);
  for (int v : members) in[v] = 1;
  return in;
}

SeedTree make_tree(const WeightedGraph& g, const std::set<std::pair<int, int>>& edges) {
  SeedTree t;
  std::set<int> nodes;
  for (const auto& [u, v] : edges) {
    double w = g.edge_weight(u, v);
    t.edges.emplace_back(u, v, w);
    t.total_weight += w;
    nodes.insert(u);
    nodes.insert(v);
  }
  t.nodes.assign(nodes.begin(), nodes.end());
  return t;
}

// Kruskal over the accumulated path union; by the cycle property this drops
// exactly the heaviest edge of every cycle.
std::set<std::pair<int, int>> prune_cycles(const WeightedGraph& g,
                                           const std::set<std::pair<int, int>>& edges) {
  std::vector<std::tuple<double, int, int>> sorted;
  sorted.reserve(edges.size());
  for (const auto& [u, v] : edges) sorted.emplace_back(g.edge_weight(u, v), u, v);
  std::sort(sorted.begin(), sorted.end());

  std::unordered_map<int, int> root;
  auto find = [&](int v) {
    if (!root.count(v)) {
      root[v] = v;
      return v;
    }
    int r = v;
    while (root[r] != r) r = root[r];
    while (root[v] != r) {
      int next = root[v];
      root[v] = r;
      v = next;
    }
    return r;
  };
  std::set<std::pair<int, int>> kept;
  for (const auto& [w, u, v] : sorted) {
    (void)w;
    int ru = find(u), rv = find(v);
    if (ru == rv) continue;
    root[ru] = rv;
    kept.insert({u, v});
  }
  return kept;
}

}  // namespace

std::map<NodeId, ShortestPath> dijkstra_sssp(const Subgraph& universe, NodeId source,
                                             std::span<const NodeId> targets) {
  const WeightedGraph& g = universe.parent();
  int src = g.to_internal(source);
  if (!universe.contains(src)) throw UnknownNode(source);

  std::vector<int> target_ids;
  for (NodeId t : targets) {
    int ti = g.to_internal(t);
    if (!universe.contains(ti)) throw UnknownNode(t);
    target_ids.push_back(ti);
  }
  std::vector<char> in = member_bitmap(g, universe.members());
  SsspResult res = sssp(g, in, src, target_ids);

  std::map<NodeId, ShortestPath> out;
  for (NodeId t : targets) {
    int ti = g.to_internal(t);
    if (res.dist[ti] == kInf) continue;
    ShortestPath p;
    p.weight = res.dist[ti];
    for (int v : backtrack(res, src, ti)) p.nodes.push_back(g.to_external(v));
    out.emplace(t, std::move(p));
  }
  return out;
}

SeedTree build_tree_mst(const WeightedGraph& g, const CoreIndex& idx,
                        std::span<const NodeId> q, int k) {
  if (q.size() < 2) throw std::invalid_argument("tree construction needs |Q| >= 2");
  Subgraph core = maximal_connected_kcore(g, idx, q, k);
  std::vector<char> in = member_bitmap(g, core.members());

  std::vector<int> qi;
  for (NodeId id : q) qi.push_back(g.to_internal(id));

  // Union of one shortest path per query pair.
  std::set<std::pair<int, int>> pw_edges;
  for (std::size_t i = 0; i + 1 < qi.size(); ++i) {
    std::vector<int> rest(qi.begin() + i + 1, qi.end());
    SsspResult res = sssp(g, in, qi[i], rest);
    for (std::size_t j = i + 1; j < qi.size(); ++j) {
      if (res.dist[qi[j]] == kInf) throw Disconnected(q[i], q[j]);
      std::vector<int> path = backtrack(res, qi[i], qi[j]);
      for (std::size_t s = 0; s + 1 < path.size(); ++s)
        pw_edges.insert(std::minmax(path[s], path[s + 1]));
    }
  }

  // Adjacency of the path-union graph.
  std::unordered_map<int, std::vector<std::pair<int, double>>> pw_adj;
  for (const auto& [u, v] : pw_edges) {
    double w = g.edge_weight(u, v);
    pw_adj[u].emplace_back(v, w);
    pw_adj[v].emplace_back(u, w);
  }
  for (auto& [v, nbrs] : pw_adj) std::sort(nbrs.begin(), nbrs.end());

  // Prim growth from the first query node, keyed on single-edge weight,
  // stopped once every query node has entered the tree.
  std::unordered_map<int, double> dist;
  std::unordered_map<int, int> parent;
  std::set<int> in_tree;
  std::set<int> pending(qi.begin(), qi.end());
  std::set<std::pair<int, int>> tree_edges;

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[qi[0]] = 0.0;
  pq.push({0.0, qi[0]});
  while (!pq.empty() && !pending.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (in_tree.count(v) || d != dist.at(v)) continue;
    in_tree.insert(v);
    if (parent.count(v)) tree_edges.insert(std::minmax(parent[v], v));
    pending.erase(v);
    if (pending.empty()) break;
    for (const auto& [u, w] : pw_adj[v]) {
      if (in_tree.count(u)) continue;
      auto it = dist.find(u);
      if (it == dist.end() || w < it->second) {
        dist[u] = w;
        parent[u] = v;
        pq.push({w, u});
      } else if (w == it->second && v < parent[u]) {
        parent[u] = v;
      }
    }
  }

  // Strip leaf branches that contain no query node.
  std::unordered_map<int, std::set<int>> tadj;
  for (const auto& [u, v] : tree_edges) {
    tadj[u].insert(v);
    tadj[v].insert(u);
  }
  std::set<int> qset(qi.begin(), qi.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = tadj.begin(); it != tadj.end();) {
      if (it->second.size() == 1 && !qset.count(it->first)) {
        int leaf = it->first;
        int nbr = *it->second.begin();
        tadj[nbr].erase(leaf);
        tree_edges.erase(std::minmax(leaf, nbr));
        it = tadj.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return make_tree(g, tree_edges);
}

SeedTree build_tree_path(const WeightedGraph& g, const CoreIndex& idx,
                         std::span<const NodeId> q, int k) {
  if (q.size() < 2) throw std::invalid_argument("tree construction needs |Q| >= 2");
  Subgraph core = maximal_connected_kcore(g, idx, q, k);
  std::vector<char> in = member_bitmap(g, core.members());

  std::vector<int> remaining;
  for (std::size_t i = 1; i < q.size(); ++i) remaining.push_back(g.to_internal(q[i]));
  int anchor = g.to_internal(q[0]);

  std::set<std::pair<int, int>> edges;
  while (!remaining.empty()) {
    SsspResult res = sssp(g, in, anchor, remaining, StopMode::any);
    int best = res.first_target;  // nearest remaining query node, ties by id
    if (best == -1) throw Disconnected(g.to_external(anchor), g.to_external(remaining[0]));
    std::vector<int> path = backtrack(res, anchor, best);
    for (std::size_t s = 0; s + 1 < path.size(); ++s)
      edges.insert(std::minmax(path[s], path[s + 1]));
    edges = prune_cycles(g, edges);
    anchor = best;
    remaining.erase(std::find(remaining.begin(), remaining.end(), best));
  }
  return make_tree(g, edges);
}

}  // namespace leks
