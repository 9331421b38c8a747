#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// here are deliberately naive re-implementations (repeated-sweep deletion,
// Floyd-Warshall, union-find) kept separate from the library code they check.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "leks/graph.hpp"

namespace testutil {

using leks::Edge;
using leks::NodeId;
using leks::WeightedGraph;

inline WeightedGraph from_triples(std::initializer_list<std::tuple<NodeId, NodeId, double>> ts) {
  std::vector<Edge> edges;
  for (const auto& [u, v, w] : ts) edges.push_back({u, v, w});
  return WeightedGraph::from_edges(edges);
}

// 12-node, 20-edge graph: the 3-core splits into the K4 on {1,2,3,4} (edge
// weights summing to 15) and the component {7..12}; the minimum-weight
// connected 3-core containing {8,10} is the K4 on {8,9,10,11} with weight 13.
inline WeightedGraph fig1_graph() {
  return from_triples({
      {1, 2, 3}, {1, 3, 5}, {1, 4, 2}, {2, 3, 1}, {2, 4, 1}, {3, 4, 3},
      {4, 5, 2}, {5, 6, 1}, {6, 7, 2},
      {7, 9, 4}, {7, 11, 4}, {7, 12, 4}, {9, 12, 4}, {11, 12, 4},
      {8, 9, 3}, {8, 10, 1}, {8, 11, 3}, {9, 10, 2}, {9, 11, 2}, {10, 11, 2},
  });
}

// 6-node, 8-edge 2-core used by the tree-construction examples: for query
// nodes {1,2,5} the shortest paths are 1-3-2, 1-3-4-5 and 2-5, and the seed
// tree weight is 7.
inline WeightedGraph fig3_graph() {
  return from_triples({
      {1, 2, 7}, {1, 3, 1}, {2, 3, 5}, {3, 4, 1},
      {4, 5, 2}, {2, 5, 3}, {1, 6, 5}, {5, 6, 5},
  });
}

// Chain of K4 blocks linked by single bridge edges; the whole chain is one
// connected 3-core, but any query local to one block resolves inside it.
inline WeightedGraph blocks_chain_graph(int blocks) {
  std::vector<Edge> edges;
  for (int b = 0; b < blocks; ++b) {
    NodeId base = 4 * b;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) edges.push_back({base + i, base + j, 1.0});
    if (b + 1 < blocks) edges.push_back({base + 3, base + 4, 1.0});
  }
  return WeightedGraph::from_edges(edges);
}

// Coreness by per-k fixpoint deletion: for each k, sweep-delete nodes of
// degree < k until stable; a node's coreness is the largest k surviving.
inline std::vector<int> naive_coreness(const WeightedGraph& g) {
  const int n = g.node_count();
  std::vector<int> core(n, 0);
  for (int k = 1; k <= n; ++k) {
    std::vector<char> in(n, 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        int d = 0;
        for (const auto& [u, w] : g.adj(v)) {
          (void)w;
          if (in[u]) ++d;
        }
        if (d < k) {
          in[v] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (int v = 0; v < n; ++v) {
      if (in[v]) {
        core[v] = k;
        any = true;
      }
    }
    if (!any) break;
  }
  return core;
}

// All-pairs shortest path weights over the members of a subgraph, indexed by
// position in `members`.
inline std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g,
                                                       const std::vector<int>& members) {
  const double inf = std::numeric_limits<double>::infinity();
  const int s = static_cast<int>(members.size());
  std::vector<int> pos(g.node_count(), -1);
  for (int i = 0; i < s; ++i) pos[members[i]] = i;

  std::vector<std::vector<double>> d(s, std::vector<double>(s, inf));
  for (int i = 0; i < s; ++i) {
    d[i][i] = 0.0;
    for (const auto& [u, w] : g.adj(members[i]))
      if (pos[u] >= 0) d[i][pos[u]] = w;
  }
  for (int m = 0; m < s; ++m)
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
  return d;
}

// Union-find over the induced edges of a member set; returns component id
// per member position.
inline std::vector<int> union_find_components(const WeightedGraph& g,
                                              const std::vector<int>& members) {
  const int s = static_cast<int>(members.size());
  std::vector<int> pos(g.node_count(), -1);
  for (int i = 0; i < s; ++i) pos[members[i]] = i;
  std::vector<int> root(s);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (int i = 0; i < s; ++i) {
    for (const auto& [u, w] : g.adj(members[i])) {
      (void)w;
      if (pos[u] >= 0) root[find(i)] = find(pos[u]);
    }
  }
  std::vector<int> comp(s);
  for (int i = 0; i < s; ++i) comp[i] = find(i);
  return comp;
}

inline int count_components(const WeightedGraph& g, const std::vector<int>& members) {
  std::vector<int> comp = union_find_components(g, members);
  std::set<int> roots(comp.begin(), comp.end());
  return static_cast<int>(roots.size());
}

// Structural feasibility check: member set contains every query node, is
// connected, and every member has induced degree >= k.
inline bool is_connected_kcore_with(const WeightedGraph& g, const std::vector<int>& members,
                                    const std::vector<NodeId>& q, int k) {
  if (members.empty()) return false;
  std::vector<char> in(g.node_count(), 0);
  for (int v : members) in[v] = 1;
  for (NodeId id : q) {
    if (!g.has_node(id) || !in[g.to_internal(id)]) return false;
  }
  for (int v : members) {
    int d = 0;
    for (const auto& [u, w] : g.adj(v)) {
      (void)w;
      if (in[u]) ++d;
    }
    if (d < k) return false;
  }
  return count_components(g, members) == 1;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "leks-test-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    path = mkdtemp(buf.data());
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; stderr passes through (append
// 2>/dev/null in the command to silence it).
inline CmdResult run_cmd(const std::string& cmd) {
  CmdResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

}  // namespace testutil
