#include "leks/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "leks/rng.hpp"

namespace leks {

WeightSpec WeightSpec::parse(const std::string& text) {
  WeightSpec ws;
  if (text == "uniform01") {
    ws.kind = Kind::uniform01;
    return ws;
  }
  if (text.rfind("integer:", 0) == 0) {
    ws.kind = Kind::integer_range;
    std::size_t sep = text.find(':', 8);
    if (sep == std::string::npos) throw FormatError("expected integer:lo:hi");
    ws.lo = std::stoll(text.substr(8, sep - 8));
    ws.hi = std::stoll(text.substr(sep + 1));
    if (ws.lo < 1 || ws.hi < ws.lo)
      throw FormatError("integer weight range must satisfy 1 <= lo <= hi");
    return ws;
  }
  throw FormatError("unknown weight model: " + text);
}

namespace {

double draw_weight(Rng& rng, const WeightSpec& ws) {
  if (ws.kind == WeightSpec::Kind::uniform01) return rng.unit_pos();
  return static_cast<double>(rng.range(ws.lo, ws.hi));
}

}  // namespace

std::vector<Edge> gen_gnp(int n, double p, std::uint64_t seed, const WeightSpec& ws) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
  Rng rng(mix_seed(seed, 0x676e70));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit_pos() <= p)
        edges.push_back({u, v, draw_weight(rng, ws)});
    }
  }
  return edges;
}

std::vector<Edge> gen_powerlaw(int n, int attach, std::uint64_t seed, const WeightSpec& ws) {
  if (attach < 1) throw std::invalid_argument("attach must be >= 1");
  if (n < attach + 1) throw std::invalid_argument("n must exceed the attachment count");
  Rng rng(mix_seed(seed, 0x706c61));

  std::vector<Edge> edges;
  // Seed clique on the first attach+1 nodes, then preferential attachment
  // via the repeated-endpoint list.
  std::vector<int> endpoints;
  for (int u = 0; u <= attach; ++u) {
    for (int v = u + 1; v <= attach; ++v) {
      edges.push_back({u, v, draw_weight(rng, ws)});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<int> chosen;
  for (int v = attach + 1; v < n; ++v) {
    chosen.clear();
    while (static_cast<int>(chosen.size()) < attach) {
      int t = endpoints[rng.below(endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
        chosen.push_back(t);
    }
    for (int t : chosen) {
      edges.push_back({t, v, draw_weight(rng, ws)});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return edges;
}

std::string format_weight(double w) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

void write_edge_list(std::ostream& out, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (Edge& e : sorted) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (const Edge& e : sorted)
    out << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
}

}  // namespace leks
