#include "leks/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <fstream>
#include <map>

namespace leks {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

template <typename T>
std::uint64_t fnv1a_value(std::uint64_t h, const T& value) {
  return fnv1a(h, &value, sizeof(value));
}

}  // namespace

WeightedGraph WeightedGraph::from_edges(std::span<const Edge> edges) {
  WeightedGraph g;

  // Register every endpoint, including those of dropped self-loops, and
  // collapse duplicate pairs to the minimum weight.
  std::map<std::pair<NodeId, NodeId>, double> canon;
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v < 0)
      throw ParseError(static_cast<int>(i + 1), "negative node id");
    if (!(e.w > 0.0))
      throw WeightError(static_cast<int>(i + 1),
                        "edge weight must be > 0, got " + std::to_string(e.w));
    ids.push_back(e.u);
    ids.push_back(e.v);
    if (e.u == e.v) {
      ++g.self_loops_;
      continue;
    }
    auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = canon.try_emplace({key.first, key.second}, e.w);
    if (!inserted && e.w < it->second) it->second = e.w;
  }

  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  g.external_ = std::move(ids);
  g.lookup_.reserve(g.external_.size());
  for (int i = 0; i < static_cast<int>(g.external_.size()); ++i)
    g.lookup_.emplace(g.external_[i], i);

  const int n = static_cast<int>(g.external_.size());
  std::vector<int> counts(n, 0);
  std::vector<std::pair<std::pair<int, int>, double>> internal_edges;
  internal_edges.reserve(canon.size());
  for (const auto& [key, w] : canon) {
    int u = g.lookup_.at(key.first);
    int v = g.lookup_.at(key.second);
    internal_edges.push_back({{u, v}, w});
    ++counts[u];
    ++counts[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + counts[v];
  g.nbrs_.resize(g.offsets_[n]);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [uv, w] : internal_edges) {
    g.nbrs_[cursor[uv.first]++] = {uv.second, w};
    g.nbrs_[cursor[uv.second]++] = {uv.first, w};
  }
  for (int v = 0; v < n; ++v)
    std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
  g.m_ = canon.size();

  std::uint64_t h = 14695981039346656037ull;
  h = fnv1a_value(h, g.external_.size());
  for (NodeId id : g.external_) h = fnv1a_value(h, id);
  h = fnv1a_value(h, g.m_);
  for (const auto& [key, w] : canon) {
    h = fnv1a_value(h, key.first);
    h = fnv1a_value(h, key.second);
    h = fnv1a_value(h, w);
  }
  g.hash_ = h;
  return g;
}

int WeightedGraph::to_internal(NodeId id) const {
  auto it = lookup_.find(id);
  if (it == lookup_.end()) throw UnknownNode(id);
  return it->second;
}

double WeightedGraph::edge_weight(int u, int v) const {
  auto nbrs = adj(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const auto& a, int b) { return a.first < b; });
  if (it == nbrs.end() || it->first != v) throw UnknownNode(external_[v]);
  return it->second;
}

bool WeightedGraph::has_edge(int u, int v) const {
  auto nbrs = adj(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                             [](const auto& a, int b) { return a.first < b; });
  return it != nbrs.end() && it->first == v;
}

std::vector<std::pair<NodeId, double>> WeightedGraph::neighbors(NodeId v) const {
  int vi = to_internal(v);
  std::vector<std::pair<NodeId, double>> out;
  out.reserve(adj(vi).size());
  for (const auto& [u, w] : adj(vi)) out.emplace_back(external_[u], w);
  return out;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < node_count(); ++u) {
    for (const auto& [v, w] : adj(u)) {
      if (u < v) out.push_back({external_[u], external_[v], w});
    }
  }
  return out;
}

double WeightedGraph::total_weight() const {
  double sum = 0.0;
  for (int u = 0; u < node_count(); ++u) {
    for (const auto& [v, w] : adj(u)) {
      if (u < v) sum += w;
    }
  }
  return sum;
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);

  std::vector<Edge> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;

    const char* s = line.c_str() + start;
    char* end = nullptr;
    errno = 0;
    long long u = std::strtoll(s, &end, 10);
    if (end == s || errno != 0) throw ParseError(lineno, "expected node id");
    s = end;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || errno != 0) throw ParseError(lineno, "expected node id");
    s = end;
    double w = std::strtod(s, &end);
    if (end == s || errno != 0) throw ParseError(lineno, "expected edge weight");
    for (s = end; *s != '\0'; ++s) {
      if (!std::isspace(static_cast<unsigned char>(*s)))
        throw ParseError(lineno, "trailing garbage");
    }
    if (u < 0 || v < 0) throw ParseError(lineno, "negative node id");
    if (!(w > 0.0)) throw WeightError(lineno, "edge weight must be > 0");
    edges.push_back({u, v, w});
  }
  if (in.bad()) throw IoError("read failure on " + path);
  return WeightedGraph::from_edges(edges);
}

Subgraph::Subgraph(const WeightedGraph& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  in_.assign(parent.node_count(), 0);
  for (int v : members_) {
    if (v < 0 || v >= parent.node_count())
      throw UnknownNode(static_cast<NodeId>(v));
    in_[v] = 1;
  }
}

int Subgraph::degree(int v) const {
  int d = 0;
  for (const auto& [u, w] : parent_->adj(v)) {
    (void)w;
    if (contains(u)) ++d;
  }
  return d;
}

std::size_t Subgraph::edge_count() const {
  std::size_t m = 0;
  each_edge([&](int, int, double) { ++m; });
  return m;
}

std::vector<NodeId> Subgraph::member_ids() const {
  std::vector<NodeId> out;
  out.reserve(members_.size());
  for (int v : members_) out.push_back(parent_->to_external(v));
  return out;
}

double group_weight(const Subgraph& h) {
  double sum = 0.0;
  h.each_edge([&](int, int, double w) { sum += w; });
  return sum;
}

Subgraph induced_subgraph(const WeightedGraph& g, std::span<const NodeId> members) {
  std::vector<int> internal;
  internal.reserve(members.size());
  for (NodeId id : members) internal.push_back(g.to_internal(id));
  return Subgraph(g, std::move(internal));
}

Subgraph induced_subgraph_internal(const WeightedGraph& g, std::vector<int> members) {
  return Subgraph(g, std::move(members));
}

Subgraph connected_component_containing(const Subgraph& h, NodeId v) {
  int start = h.parent().to_internal(v);
  if (!h.contains(start)) throw UnknownNode(v);
  return Subgraph(h.parent(), component_members(h.parent(), h.members(), start));
}

std::vector<int> component_members(const WeightedGraph& g, std::span<const int> members,
                                   int start) {
  std::vector<char> in(g.node_count(), 0);
  for (int v : members) in[v] = 1;

  std::vector<char> seen(g.node_count(), 0);
  std::deque<int> queue;
  std::vector<int> comp;
  seen[start] = 1;
  queue.push_back(start);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    comp.push_back(v);
    for (const auto& [u, w] : g.adj(v)) {
      (void)w;
      if (in[u] && !seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace leks
