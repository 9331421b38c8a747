#include "leks/core_index.hpp"

#include <algorithm>
#include <cerrno>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <stdexcept>

namespace leks {

int CoreIndex::coreness_of(NodeId id) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
  if (it == nodes.end() || *it != id) throw UnknownNode(id);
  return coreness[it - nodes.begin()];
}

CoreIndex core_decompose(const WeightedGraph& g) {
  const int n = g.node_count();
  CoreIndex idx;
  idx.nodes = g.node_ids();
  idx.coreness.assign(n, 0);
  idx.graph_hash = g.content_hash();

  std::vector<int> deg(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }

  // Bucket queue over current degrees with lazy (stale) entries. The peel
  // level only ever rises; nodes whose degree fell below it inherit it.
  std::vector<std::vector<int>> bucket(max_deg + 1);
  for (int v = 0; v < n; ++v) bucket[deg[v]].push_back(v);

  std::vector<char> removed(n, 0);
  int cursor = 0;
  int level = 0;
  int remaining = n;
  while (remaining > 0) {
    while (cursor <= max_deg && bucket[cursor].empty()) ++cursor;
    if (cursor > max_deg) break;  // unreachable: every live node has a current entry
    int v = bucket[cursor].back();
    bucket[cursor].pop_back();
    if (removed[v] || deg[v] != cursor) continue;  // stale entry

    level = std::max(level, cursor);
    idx.coreness[v] = level;
    removed[v] = 1;
    --remaining;
    for (const auto& [u, w] : g.adj(v)) {
      (void)w;
      if (removed[u]) continue;
      bucket[--deg[u]].push_back(u);
      cursor = std::min(cursor, deg[u]);
    }
  }

  idx.delta_max = 0;
  for (int c : idx.coreness) idx.delta_max = std::max(idx.delta_max, c);
  return idx;
}

void save_index(const CoreIndex& idx, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  char header[64];
  std::snprintf(header, sizeof(header), "#coreness v1 %016" PRIx64, idx.graph_hash);
  out << header << '\n';
  for (std::size_t i = 0; i < idx.nodes.size(); ++i)
    out << idx.nodes[i] << ' ' << idx.coreness[i] << '\n';
  out.flush();
  if (!out) throw IoError("write failure on " + path);
}

CoreIndex load_index(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty index file " + path);
  std::uint64_t hash = 0;
  {
    char tag[32] = {0};
    char ver[16] = {0};
    if (std::sscanf(line.c_str(), "%31s %15s %" SCNx64, tag, ver, &hash) != 3 ||
        std::string(tag) != "#coreness" || std::string(ver) != "v1")
      throw FormatError("bad index header: " + line);
  }

  CoreIndex idx;
  idx.graph_hash = hash;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    char* end = nullptr;
    errno = 0;
    long long id = std::strtoll(line.c_str(), &end, 10);
    if (end == line.c_str() || errno != 0)
      throw FormatError("bad index entry at line " + std::to_string(lineno));
    const char* s = end;
    long c = std::strtol(s, &end, 10);
    if (end == s || errno != 0 || c < 0)
      throw FormatError("bad coreness at line " + std::to_string(lineno));
    if (!idx.nodes.empty() && id <= idx.nodes.back())
      throw FormatError("index entries not sorted at line " + std::to_string(lineno));
    idx.nodes.push_back(id);
    idx.coreness.push_back(static_cast<int>(c));
    idx.delta_max = std::max(idx.delta_max, static_cast<int>(c));
  }
  return idx;
}

namespace {

void require_match(const WeightedGraph& g, const CoreIndex& idx) {
  if (!idx.matches(g))
    throw FormatError("core index does not match the graph content");
}

}  // namespace

Subgraph kcore_of(const WeightedGraph& g, const CoreIndex& idx, int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  require_match(g, idx);
  std::vector<int> members;
  for (int v = 0; v < g.node_count(); ++v)
    if (idx.coreness_of_internal(v) >= k) members.push_back(v);
  return Subgraph(g, std::move(members));
}

Subgraph maximal_connected_kcore(const WeightedGraph& g, const CoreIndex& idx,
                                 std::span<const NodeId> q, int k) {
  if (q.empty()) throw std::invalid_argument("query set must be non-empty");
  require_match(g, idx);

  std::vector<int> qi;
  qi.reserve(q.size());
  for (NodeId id : q) {
    int v = g.to_internal(id);
    if (idx.coreness_of_internal(v) < k) throw QueryNotInCore(id, k);
    qi.push_back(v);
  }

  std::vector<int> core;
  for (int v = 0; v < g.node_count(); ++v)
    if (idx.coreness_of_internal(v) >= k) core.push_back(v);

  std::vector<int> comp = component_members(g, core, qi[0]);
  std::vector<char> in_comp(g.node_count(), 0);
  for (int v : comp) in_comp[v] = 1;
  for (std::size_t i = 1; i < qi.size(); ++i)
    if (!in_comp[qi[i]]) throw Disconnected(q[0], q[i]);
  return Subgraph(g, std::move(comp));
}

std::vector<int> kcore_members(const WeightedGraph& g, std::span<const int> members,
                               int k) {
  std::vector<char> in(g.node_count(), 0);
  for (int v : members) in[v] = 1;

  std::vector<int> deg(g.node_count(), 0);
  std::deque<int> doomed;
  for (int v : members) {
    int d = 0;
    for (const auto& [u, w] : g.adj(v)) {
      (void)w;
      if (in[u]) ++d;
    }
    deg[v] = d;
    if (d < k) doomed.push_back(v);
  }
  while (!doomed.empty()) {
    int v = doomed.front();
    doomed.pop_front();
    if (!in[v]) continue;
    in[v] = 0;
    for (const auto& [u, w] : g.adj(v)) {
      (void)w;
      if (in[u] && deg[u]-- == k) doomed.push_back(u);
    }
  }

  std::vector<int> out;
  for (int v : members)
    if (in[v]) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<int>> connected_kcore_containing(const WeightedGraph& g,
                                                           std::span<const int> members,
                                                           std::span<const int> q_internal,
                                                           int k) {
  std::vector<int> survivors = kcore_members(g, members, k);
  if (survivors.empty() || q_internal.empty()) return std::nullopt;

  std::vector<char> in(g.node_count(), 0);
  for (int v : survivors) in[v] = 1;
  for (int qv : q_internal)
    if (!in[qv]) return std::nullopt;

  std::vector<int> comp = component_members(g, survivors, q_internal[0]);
  std::vector<char> in_comp(g.node_count(), 0);
  for (int v : comp) in_comp[v] = 1;
  for (int qv : q_internal)
    if (!in_comp[qv]) return std::nullopt;
  return comp;
}

}  // namespace leks
