#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "leks/graph.hpp"

namespace leks {

// Edge-weight model for synthetic graphs: uniform01 draws from (0,1],
// integer_range draws whole numbers from [lo, hi].
struct WeightSpec {
  enum class Kind { uniform01, integer_range };
  Kind kind = Kind::uniform01;
  std::int64_t lo = 1;
  std::int64_t hi = 10;

  // Parses "uniform01" or "integer:lo:hi".
  static WeightSpec parse(const std::string& text);
};

// Erdos-Renyi G(n,p).
std::vector<Edge> gen_gnp(int n, double p, std::uint64_t seed, const WeightSpec& ws);

// Preferential attachment: each new node attaches to `attach` distinct
// existing nodes with probability proportional to degree, giving a
// heavy-tailed degree distribution.
std::vector<Edge> gen_powerlaw(int n, int attach, std::uint64_t seed, const WeightSpec& ws);

// Canonical edge-list text: "u v w" per line, u < v, sorted; weights printed
// with full round-trip precision.
void write_edge_list(std::ostream& out, std::span<const Edge> edges);

std::string format_weight(double w);

}  // namespace leks
