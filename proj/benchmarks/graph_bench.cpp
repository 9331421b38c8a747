#include <benchmark/benchmark.h>

#include "leks/core_index.hpp"
#include "leks/generator.hpp"
#include "leks/search.hpp"
#include "leks/seed_tree.hpp"
#include "leks/workload.hpp"

using namespace leks;

namespace {

WeightedGraph make_graph(int n) {
  return WeightedGraph::from_edges(gen_powerlaw(n, 5, 12345, WeightSpec{}));
}

void BM_CoreDecompose(benchmark::State& state) {
  WeightedGraph g = make_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CoreIndex idx = core_decompose(g);
    benchmark::DoNotOptimize(idx.delta_max);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CoreDecompose)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

void BM_DijkstraSssp(benchmark::State& state) {
  WeightedGraph g = make_graph(static_cast<int>(state.range(0)));
  Subgraph all = induced_subgraph(g, g.node_ids());
  std::vector<NodeId> target{g.to_external(g.node_count() - 1)};
  for (auto _ : state) {
    auto paths = dijkstra_sssp(all, g.to_external(0), target);
    benchmark::DoNotOptimize(paths.size());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DijkstraSssp)->RangeMultiplier(4)->Range(1024, 65536)->Complexity();

void run_strategy(benchmark::State& state, Strategy strategy) {
  WeightedGraph g = make_graph(8192);
  CoreIndex idx = core_decompose(g);
  auto workload = make_workload(g, idx, 4, 3, 16, 99);
  std::size_t i = 0;
  for (auto _ : state) {
    QuerySpec spec;
    spec.q = workload[i % workload.size()].q;
    spec.k = workload[i % workload.size()].k;
    spec.strategy = strategy;
    ++i;
    GroupResult res = run_query(g, idx, spec);
    benchmark::DoNotOptimize(res.weight);
  }
}

void BM_QueryTreePath(benchmark::State& state) { run_strategy(state, Strategy::tree_path); }
void BM_QueryTreeMst(benchmark::State& state) { run_strategy(state, Strategy::tree_mst); }
void BM_QueryGlobalIcgm(benchmark::State& state) {
  run_strategy(state, Strategy::global_icgm);
}
BENCHMARK(BM_QueryTreePath)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QueryTreeMst)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QueryGlobalIcgm)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
