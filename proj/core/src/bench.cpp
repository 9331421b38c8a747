#include "leks/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "leks/generator.hpp"

namespace leks {

const char* protocol_name(Protocol p) {
  switch (p) {
    case Protocol::vary_k:
      return "vary-k";
    case Protocol::vary_q:
      return "vary-q";
    case Protocol::iterations:
      return "iterations";
  }
  return "?";
}

std::optional<Protocol> parse_protocol(const std::string& name) {
  if (name == "vary-k") return Protocol::vary_k;
  if (name == "vary-q") return Protocol::vary_q;
  if (name == "iterations") return Protocol::iterations;
  return std::nullopt;
}

namespace {

constexpr Strategy kStrategies[] = {Strategy::tree_mst, Strategy::tree_path,
                                    Strategy::global_icgm, Strategy::global_icgs};

struct Config {
  int k;
  int q_size;
};

std::vector<Config> protocol_configs(const BenchOptions& opt) {
  switch (opt.protocol) {
    case Protocol::vary_k:
      return {{2, opt.q_size}, {4, opt.q_size}, {6, opt.q_size}, {8, opt.q_size}};
    case Protocol::vary_q:
      return {{opt.k, 1}, {opt.k, 2}, {opt.k, 3}, {opt.k, 4},
              {opt.k, 5}, {opt.k, 6}, {opt.k, 7}};
    case Protocol::iterations:
      return {{6, 5}};
  }
  return {};
}

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string join_weights(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ';';
    out += format_weight(xs[i]);
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_bench(const WeightedGraph& g, const CoreIndex& idx,
                                   const BenchOptions& opt) {
  if (opt.queries < 0) throw std::invalid_argument("queries must be >= 0");

  struct Task {
    WorkloadQuery query;
    int query_id;
    Strategy strategy;
  };
  std::vector<Task> tasks;
  for (const Config& cfg : protocol_configs(opt)) {
    std::vector<WorkloadQuery> workload =
        make_workload(g, idx, cfg.k, cfg.q_size, opt.queries, opt.seed);
    for (int qi = 0; qi < static_cast<int>(workload.size()); ++qi) {
      for (Strategy s : kStrategies)
        tasks.push_back({workload[qi], qi, s});
    }
  }

  std::vector<BenchRecord> records(tasks.size());
  auto run_task = [&](std::size_t i) {
    const Task& task = tasks[i];
    QuerySpec spec;
    spec.q = task.query.q;
    spec.k = task.query.k;
    spec.strategy = task.strategy;
    spec.refine = opt.refine;
    spec.max_depth = opt.max_depth;
    GroupResult res = run_query(g, idx, spec);

    BenchRecord& rec = records[i];
    rec.protocol = opt.protocol;
    rec.query_id = task.query_id;
    rec.strategy = task.strategy;
    rec.k = task.query.k;
    rec.q_size = static_cast<int>(task.query.q.size());
    rec.feasible = res.feasible;
    rec.reason = res.fail_reason();
    rec.weight = res.feasible ? res.weight : 0.0;
    if (opt.record_timing) {
      rec.tree_ms = res.stats.tree_ms;
      rec.expand_ms = res.stats.expand_ms;
      rec.refine_ms = res.stats.refine_ms;
      rec.total_ms = res.stats.tree_ms + res.stats.expand_ms + res.stats.refine_ms;
    }
    rec.iterations = res.stats.iterations;
    rec.levels_used = res.stats.levels_used;
    rec.initial_size = res.stats.sizes.empty() ? 0 : res.stats.sizes.front();
    rec.final_size = res.feasible ? res.group.size() : 0;
    if (opt.protocol == Protocol::iterations) {
      rec.sizes = res.stats.sizes;
      rec.weights = res.stats.weights;
    }
  };

  int threads = std::max(1, opt.threads);
  if (threads == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> cursor{0};
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor.fetch_add(1); i < tasks.size();
             i = cursor.fetch_add(1))
          run_task(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "# leks-bench-csv v1\n";
  out << "protocol,query_id,strategy,k,q_size,feasible,reason,weight,"
         "tree_ms,expand_ms,refine_ms,total_ms,iterations,l_max,"
         "initial_size,final_size,sizes,weights\n";
  char ms[4][32];
  for (const BenchRecord& r : records) {
    std::snprintf(ms[0], sizeof(ms[0]), "%.3f", r.tree_ms);
    std::snprintf(ms[1], sizeof(ms[1]), "%.3f", r.expand_ms);
    std::snprintf(ms[2], sizeof(ms[2]), "%.3f", r.refine_ms);
    std::snprintf(ms[3], sizeof(ms[3]), "%.3f", r.total_ms);
    out << protocol_name(r.protocol) << ',' << r.query_id << ','
        << strategy_name(r.strategy) << ',' << r.k << ',' << r.q_size << ','
        << (r.feasible ? 1 : 0) << ',' << r.reason << ','
        << format_weight(r.weight) << ',' << ms[0] << ',' << ms[1] << ','
        << ms[2] << ',' << ms[3] << ',' << r.iterations << ','
        << r.levels_used << ',' << r.initial_size << ',' << r.final_size << ','
        << join_sizes(r.sizes) << ',' << join_weights(r.weights) << '\n';
  }
}

}  // namespace leks
