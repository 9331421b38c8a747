#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leks/search.hpp"
#include "leks/workload.hpp"

namespace leks {

enum class Protocol { vary_k, vary_q, iterations };

const char* protocol_name(Protocol p);
std::optional<Protocol> parse_protocol(const std::string& name);

struct BenchOptions {
  Protocol protocol = Protocol::vary_k;
  std::uint64_t seed = 0;
  int queries = 100;   // per configuration
  int q_size = 3;      // |Q| for the vary-k protocol
  int k = 4;           // k for the vary-q protocol
  RefineConfig refine;
  std::optional<int> max_depth;
  int threads = 1;
  bool record_timing = true;  // false zeroes the ms columns for reproducible CSVs
};

// One CSV row per (query, strategy).
struct BenchRecord {
  Protocol protocol = Protocol::vary_k;
  int query_id = 0;
  Strategy strategy = Strategy::tree_path;
  int k = 0;
  int q_size = 0;
  bool feasible = false;
  std::string reason;
  double weight = 0.0;
  double tree_ms = 0.0;
  double expand_ms = 0.0;
  double refine_ms = 0.0;
  double total_ms = 0.0;
  int iterations = 0;
  int levels_used = 0;
  std::size_t initial_size = 0;
  std::size_t final_size = 0;
  std::vector<std::size_t> sizes;  // filled by the iterations protocol only
  std::vector<double> weights;
};

// Runs the protocol's configurations over seeded workloads, all strategies
// on the identical queries. Infeasible queries are recorded, not dropped.
std::vector<BenchRecord> run_bench(const WeightedGraph& g, const CoreIndex& idx,
                                   const BenchOptions& opt);

// Fixed, versioned column set; series cells are ';'-joined.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace leks
