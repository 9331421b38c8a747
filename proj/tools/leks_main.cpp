// Command-line front end: offline index construction, intimate-core group
// queries, synthetic graph generation, benchmark protocols, and the exact
// brute-force oracle for toy graphs.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "leks/bench.hpp"
#include "leks/core_index.hpp"
#include "leks/generator.hpp"
#include "leks/oracle.hpp"
#include "leks/search.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

std::vector<leks::NodeId> parse_id_list(const std::string& text) {
  std::vector<leks::NodeId> ids;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    ids.push_back(std::stoll(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return ids;
}

// Loads the index for a graph, rebuilding and rewriting it when the stored
// content hash no longer matches the graph file.
leks::CoreIndex load_or_refresh_index(const leks::WeightedGraph& g,
                                      const std::string& index_path) {
  leks::CoreIndex idx = leks::load_index(index_path);
  if (!idx.matches(g)) {
    std::cerr << "index is stale, rebuilding " << index_path << "\n";
    idx = leks::core_decompose(g);
    leks::save_index(idx, index_path);
  }
  return idx;
}

json result_to_json(const leks::GroupResult& res) {
  json j;
  j["feasible"] = res.feasible;
  json members = json::array();
  json edges = json::array();
  double weight = 0.0;
  if (res.feasible) {
    const leks::WeightedGraph& g = res.group.parent();
    for (leks::NodeId id : res.group.member_ids()) members.push_back(id);
    res.group.each_edge([&](int u, int v, double w) {
      edges.push_back({g.to_external(u), g.to_external(v), w});
    });
    weight = res.weight;
  } else {
    j["reason"] = res.fail_reason();
  }
  j["members"] = std::move(members);
  j["edges"] = std::move(edges);
  j["weight"] = weight;
  j["stats"] = {{"tree_ms", res.stats.tree_ms},
                {"expand_ms", res.stats.expand_ms},
                {"refine_ms", res.stats.refine_ms},
                {"iterations", res.stats.iterations},
                {"l_max", res.stats.levels_used},
                {"sizes", res.stats.sizes},
                {"weights", res.stats.weights}};
  return j;
}

int cmd_index(const std::string& graph_path, const std::string& index_path) {
  leks::WeightedGraph g = leks::load_graph(graph_path);
  if (g.self_loops_dropped() > 0)
    std::cerr << "dropped " << g.self_loops_dropped() << " self-loop(s)\n";
  leks::CoreIndex idx = leks::core_decompose(g);
  leks::save_index(idx, index_path);
  std::cerr << "indexed " << g.node_count() << " nodes, " << g.edge_count()
            << " edges, delta_max=" << idx.delta_max << "\n";
  return kExitOk;
}

int cmd_query(const std::string& graph_path, const std::string& index_path,
              const std::string& q_text, int k, const std::string& strategy,
              double epsilon, const std::string& scorer,
              std::optional<int> max_depth) {
  leks::QuerySpec spec;
  spec.q = parse_id_list(q_text);
  spec.k = k;
  auto strat = leks::parse_strategy(strategy);
  if (!strat) {
    std::cerr << "unknown strategy: " << strategy << "\n";
    return kExitError;
  }
  spec.strategy = *strat;
  spec.refine.epsilon = epsilon;
  if (scorer == "sum") {
    spec.refine.scorer = leks::Scorer::weight_sum;
  } else if (scorer == "max") {
    spec.refine.scorer = leks::Scorer::weight_max;
  } else {
    std::cerr << "unknown scorer: " << scorer << "\n";
    return kExitError;
  }
  spec.max_depth = max_depth;

  leks::WeightedGraph g = leks::load_graph(graph_path);
  leks::CoreIndex idx = load_or_refresh_index(g, index_path);
  leks::GroupResult res = leks::run_query(g, idx, spec);
  std::cout << result_to_json(res).dump(2) << "\n";
  return res.feasible ? kExitOk : kExitInfeasible;
}

int cmd_gen(int nodes, const std::string& model, double p, int attach,
            std::uint64_t seed, const std::string& weights) {
  leks::WeightSpec ws = leks::WeightSpec::parse(weights);
  std::vector<leks::Edge> edges;
  if (model == "gnp") {
    edges = leks::gen_gnp(nodes, p, seed, ws);
  } else if (model == "powerlaw") {
    edges = leks::gen_powerlaw(nodes, attach, seed, ws);
  } else {
    std::cerr << "unknown model: " << model << "\n";
    return kExitError;
  }
  leks::write_edge_list(std::cout, edges);
  return kExitOk;
}

int cmd_bench(const std::string& graph_path, const std::string& index_path,
              const std::string& protocol, std::uint64_t seed, int queries,
              int q_size, int k, double epsilon, int threads, bool no_timing,
              const std::string& out_path) {
  leks::BenchOptions opt;
  auto proto = leks::parse_protocol(protocol);
  if (!proto) {
    std::cerr << "unknown protocol: " << protocol << "\n";
    return kExitError;
  }
  opt.protocol = *proto;
  opt.seed = seed;
  opt.queries = queries;
  opt.q_size = q_size;
  opt.k = k;
  opt.refine.epsilon = epsilon;
  opt.threads = threads;
  opt.record_timing = !no_timing;

  leks::WeightedGraph g = leks::load_graph(graph_path);
  leks::CoreIndex idx = load_or_refresh_index(g, index_path);
  std::vector<leks::BenchRecord> records = leks::run_bench(g, idx, opt);

  std::ofstream out(out_path);
  if (!out) throw leks::IoError("cannot write " + out_path);
  leks::write_csv(out, records);
  out.flush();
  if (!out) throw leks::IoError("write failure on " + out_path);
  std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& graph_path, const std::string& q_text, int k,
               int budget) {
  leks::WeightedGraph g = leks::load_graph(graph_path);
  std::vector<leks::NodeId> q = parse_id_list(q_text);
  auto res = leks::oracle_min_group(g, q, k, budget);
  json j;
  j["feasible"] = res.has_value();
  j["members"] = res ? json(res->members) : json::array();
  j["weight"] = res ? res->weight : 0.0;
  std::cout << j.dump(2) << "\n";
  return res ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intimate-core group search in weighted graphs"};
  app.require_subcommand(1);

  std::string graph_path, index_path, q_text, out_path;
  std::string strategy = "tree-path";
  std::string scorer = "sum";
  std::string model = "gnp";
  std::string weights = "uniform01";
  std::string protocol = "vary-k";
  int k = 2;
  double epsilon = 0.1;
  int max_depth_flag = -1;
  int nodes = 100;
  double p = 0.1;
  int attach = 3;
  std::uint64_t seed = 0;
  int queries = 100;
  int q_size = 3;
  int threads = 1;
  bool no_timing = false;
  int budget = 16;

  auto* c_index = app.add_subcommand("index", "Build the coreness index for a graph");
  c_index->add_option("graph", graph_path, "edge-list file")->required();
  c_index->add_option("index", index_path, "output index file")->required();

  auto* c_query = app.add_subcommand("query", "Find an intimate-core group");
  c_query->add_option("graph", graph_path)->required();
  c_query->add_option("index", index_path)->required();
  c_query->add_option("--q", q_text, "comma-separated query node ids")->required();
  c_query->add_option("--k", k, "core parameter, >= 1")->required()->check(CLI::Range(1, 1 << 30));
  c_query->add_option("--strategy", strategy, "tree-mst|tree-path|global-icgm|global-icgs");
  c_query->add_option("--epsilon", epsilon, "bulk deletion fraction in (0,1)");
  c_query->add_option("--scorer", scorer, "sum|max");
  c_query->add_option("--max-depth", max_depth_flag, "expansion depth limit");

  auto* c_gen = app.add_subcommand("gen", "Generate a synthetic weighted graph");
  c_gen->add_option("--nodes", nodes)->required()->check(CLI::NonNegativeNumber);
  c_gen->add_option("--model", model, "gnp|powerlaw");
  c_gen->add_option("--p", p, "gnp edge probability");
  c_gen->add_option("--attach", attach, "powerlaw attachment count");
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--weights", weights, "uniform01|integer:lo:hi");

  auto* c_bench = app.add_subcommand("bench", "Run a benchmark protocol, emit CSV");
  c_bench->add_option("graph", graph_path)->required();
  c_bench->add_option("index", index_path)->required();
  c_bench->add_option("--protocol", protocol, "vary-k|vary-q|iterations");
  c_bench->add_option("--seed", seed);
  c_bench->add_option("--queries", queries, "queries per configuration");
  c_bench->add_option("--q-size", q_size, "|Q| for vary-k");
  c_bench->add_option("--k", k, "k for vary-q");
  c_bench->add_option("--epsilon", epsilon);
  c_bench->add_option("--threads", threads);
  c_bench->add_flag("--no-timing", no_timing, "zero the ms columns for byte-stable output");
  c_bench->add_option("--out", out_path, "output CSV path")->required();

  auto* c_oracle = app.add_subcommand("oracle", "Exact minimum group on a toy graph");
  c_oracle->add_option("graph", graph_path)->required();
  c_oracle->add_option("--q", q_text)->required();
  c_oracle->add_option("--k", k)->required()->check(CLI::Range(1, 1 << 30));
  c_oracle->add_option("--budget", budget, "node budget, <= 24");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (c_index->parsed()) return cmd_index(graph_path, index_path);
    if (c_query->parsed()) {
      std::optional<int> max_depth;
      if (max_depth_flag >= 0) max_depth = max_depth_flag;
      return cmd_query(graph_path, index_path, q_text, k, strategy, epsilon, scorer,
                       max_depth);
    }
    if (c_gen->parsed()) return cmd_gen(nodes, model, p, attach, seed, weights);
    if (c_bench->parsed())
      return cmd_bench(graph_path, index_path, protocol, seed, queries, q_size, k,
                       epsilon, threads, no_timing, out_path);
    if (c_oracle->parsed()) return cmd_oracle(graph_path, q_text, k, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
