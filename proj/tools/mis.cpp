// Command-line surface for the greedy-MIS library: single runs with
// full JSON traces, batch benchmarks with CSV output, the lower-bound
// experiment, dependency-graph export, and the matching / coloring /
// clustering reductions.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmis/applications.hpp"
#include "gmis/dependency.hpp"
#include "gmis/experiments.hpp"
#include "gmis/generators.hpp"
#include "gmis/graph.hpp"
#include "gmis/mis.hpp"
#include "gmis/permutation.hpp"
#include "gmis/rng.hpp"
#include "gmis/signed_graph.hpp"

namespace {

gmis::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  return gmis::read_edge_list(in);
}

gmis::SignedCompleteGraph load_signed(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open signed input file '" + path + "'");
  return gmis::read_signed_graph(in);
}

// Stream purposes match the benchmark harness: 1 = vertex order,
// 2 = luby, 3 = matching, 4 = coloring.
void cmd_run(const std::string& input, std::uint64_t seed, const std::string& algo) {
  const gmis::Graph g = load_graph(input);
  gmis::MisRun run;
  if (algo == "luby") {
    gmis::RngStream rng(seed, 2);
    run = gmis::luby(g, rng);
  } else {
    gmis::RngStream rng(seed, 1);
    const gmis::Permutation perm = gmis::random_permutation(g.n(), rng);
    if (algo == "parallel") {
      run = gmis::parallel_greedy(g, perm);
    } else if (algo == "sequential") {
      run = gmis::sequential_greedy(g, perm);
    } else if (algo == "slowed") {
      run = gmis::slowed_parallel_greedy(g, perm);
    } else {
      throw std::invalid_argument("unknown algorithm '" + algo + "'");
    }
  }
  if (!gmis::verify_mis(g, run.in_mis))
    throw gmis::invariant_violation("result is not a maximal independent set");
  std::cout << gmis::to_json(run).dump(2) << '\n';
}

void cmd_bench(gmis::ExperimentConfig cfg, const std::string& out_path, bool timing, bool fit) {
  const auto records = gmis::run_trials(cfg);
  if (out_path.empty()) {
    gmis::write_csv(records, std::cout, timing);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    gmis::write_csv(records, out, timing);
  }
  if (fit) {
    for (gmis::Algorithm algo : cfg.algorithms) {
      std::vector<gmis::TrialRecord> filtered;
      for (const auto& rec : records)
        if (rec.algorithm == algo) filtered.push_back(rec);
      const gmis::LogFit f = gmis::fit_log_scaling(filtered);
      std::cerr << gmis::algorithm_name(algo) << ": rounds ~ " << f.slope << " * log2(n) + "
                << f.intercept << " (r^2 = " << f.r_squared << ")\n";
    }
  }
}

void cmd_lowerbound(std::uint32_t n, std::uint32_t trials, std::uint64_t seed) {
  const gmis::LowerBoundParams params = gmis::lower_bound_params(n);
  const double fraction = gmis::lower_bound_experiment(n, trials, seed);
  nlohmann::ordered_json j;
  j["n"] = n;
  j["l"] = params.l;
  j["components"] = params.components;
  j["threshold_rounds"] = params.round_threshold();
  j["trials"] = trials;
  j["fraction_at_threshold"] = fraction;
  std::cout << j.dump(2) << '\n';
}

void cmd_depgraph(const std::string& input, std::uint64_t seed, const std::string& dot_path,
                  double beta) {
  const gmis::Graph g = load_graph(input);
  gmis::RngStream rng(seed, 1);
  const gmis::Permutation perm = gmis::random_permutation(g.n(), rng);
  const gmis::MisRun seq = gmis::sequential_greedy(g, perm);
  const gmis::DependencyDag dag = gmis::build_dependency_dag(g, perm, seq);
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw std::invalid_argument("cannot open DOT output file '" + dot_path + "'");
    gmis::write_dot(dag, out);
  }
  const std::uint32_t dep_len = gmis::dependency_length(dag);
  const gmis::MisRun par = gmis::parallel_greedy(g, perm);
  if (g.n() > 0 && !gmis::check_round_bound(par, dep_len))
    throw gmis::invariant_violation("round bound violated");
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["dependency_length"] = dep_len;
  j["longest_increasing_path"] = gmis::longest_increasing_path(g, perm);
  j["max_suffix_degree"] = g.n() > 1 ? gmis::max_suffix_degree(g, perm, beta) : 0;
  j["parallel_rounds"] = par.num_rounds;
  std::cout << j.dump(2) << '\n';
}

void cmd_cluster(const std::string& input, std::uint64_t seed, bool oracle) {
  const gmis::SignedCompleteGraph s = load_signed(input);
  gmis::RngStream rng(seed, 1);
  const gmis::Permutation perm = gmis::random_permutation(s.n(), rng);
  const gmis::Clustering c = gmis::cc_pivot(s, perm);
  nlohmann::ordered_json j = gmis::to_json(c, gmis::cc_cost(s, c));
  if (oracle) j["opt"] = gmis::brute_force_cc_opt(s);
  std::cout << j.dump(2) << '\n';
}

void cmd_match(const std::string& input, std::uint64_t seed) {
  const gmis::Graph g = load_graph(input);
  gmis::RngStream rng(seed, 3);
  const gmis::MatchingResult res = gmis::greedy_maximal_matching(g, rng);
  if (!gmis::verify_matching(g, res.matching))
    throw gmis::invariant_violation("matching validator failed");
  std::cout << g.n() << ' ' << res.matching.edges.size() << '\n';
  for (const auto& [u, v] : res.matching.edges) std::cout << u << ' ' << v << '\n';
  std::cerr << "rounds: " << res.rounds << '\n';
}

void cmd_color(const std::string& input, std::int64_t delta_arg, std::uint64_t seed) {
  const gmis::Graph g = load_graph(input);
  const std::uint32_t delta =
      delta_arg < 0 ? g.max_degree() : static_cast<std::uint32_t>(delta_arg);
  gmis::RngStream rng(seed, 4);
  const gmis::ColoringResult res = gmis::greedy_coloring(g, delta, rng);
  if (!gmis::verify_coloring(g, res.coloring, delta))
    throw gmis::invariant_violation("coloring validator failed");
  std::cout << g.n() << '\n';
  for (gmis::VertexId v = 0; v < g.n(); ++v) std::cout << v << ' ' << res.coloring.color[v] << '\n';
  std::cerr << "rounds: " << res.rounds << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel randomized greedy MIS toolkit"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run one MIS algorithm on a graph file, JSON to stdout");
  std::string run_input, run_algo = "parallel";
  std::uint64_t run_seed = 0;
  run->add_option("--input", run_input, "edge-list file")->required();
  run->add_option("--seed", run_seed, "random seed")->capture_default_str();
  run->add_option("--algo", run_algo, "parallel|sequential|slowed|luby")->capture_default_str();
  run->callback([&] { cmd_run(run_input, run_seed, run_algo); });

  // bench
  auto* bench = app.add_subcommand("bench", "batch experiments, CSV output");
  gmis::ExperimentConfig cfg;
  std::string bench_workload = "gnp", bench_out, bench_algos = "parallel", bench_input;
  double bench_p = -1.0, bench_p_times_n = -1.0;
  bool bench_timing = false, bench_fit = false;
  bench->add_option("--workload", bench_workload, "gnp|lower_bound|file")->capture_default_str();
  bench->add_option("--n", cfg.n_values, "vertex counts (comma separated)")->delimiter(',');
  bench->add_option("--input", bench_input, "edge-list file for the file workload");
  bench->add_option("--p", bench_p, "gnp edge probability");
  bench->add_option("--p-times-n", bench_p_times_n, "gnp expected degree (p = value/n)");
  bench->add_option("--trials", cfg.trials, "trials per n")->capture_default_str();
  bench->add_option("--seed", cfg.master_seed, "master seed")->capture_default_str();
  bench->add_option("--beta", cfg.beta, "suffix fraction")->capture_default_str();
  bench->add_option("--algos", bench_algos, "comma list of parallel,slowed,luby,matching,coloring")
      ->capture_default_str();
  bench->add_option("--dep-max-n", cfg.dep_max_n, "skip dependency stats above this n")
      ->capture_default_str();
  bench->add_option("--threads", cfg.threads, "worker threads (0 = hardware)")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  bench->add_flag("--timing", bench_timing, "emit measured wall times instead of 0");
  bench->add_flag("--fit", bench_fit, "print a log2(n) fit per algorithm to stderr");
  bench->callback([&] {
    cfg.workload = gmis::workload_from_name(bench_workload);
    cfg.input_path = bench_input;
    if (bench_p >= 0.0 && bench_p_times_n >= 0.0)
      throw std::invalid_argument("--p and --p-times-n are mutually exclusive");
    if (bench_p >= 0.0) {
      cfg.p_or_param = bench_p;
      cfg.p_is_times_n = false;
    } else if (bench_p_times_n >= 0.0) {
      cfg.p_or_param = bench_p_times_n;
      cfg.p_is_times_n = true;
    }
    cfg.algorithms.clear();
    std::stringstream names(bench_algos);
    std::string name;
    while (std::getline(names, name, ','))
      if (!name.empty()) cfg.algorithms.push_back(gmis::algorithm_from_name(name));
    cmd_bench(cfg, bench_out, bench_timing, bench_fit);
  });

  // lowerbound
  auto* lb = app.add_subcommand("lowerbound", "layered-clique lower-bound experiment");
  std::uint32_t lb_n = 0, lb_trials = 100;
  std::uint64_t lb_seed = 0;
  lb->add_option("--n", lb_n, "vertex count (>= 32)")->required();
  lb->add_option("--trials", lb_trials, "number of trials")->capture_default_str();
  lb->add_option("--seed", lb_seed, "master seed")->capture_default_str();
  lb->callback([&] { cmd_lowerbound(lb_n, lb_trials, lb_seed); });

  // depgraph
  auto* dep = app.add_subcommand("depgraph", "dependency DAG export and statistics");
  std::string dep_input, dep_dot;
  std::uint64_t dep_seed = 0;
  double dep_beta = 0.005;
  dep->add_option("--input", dep_input, "edge-list file")->required();
  dep->add_option("--seed", dep_seed, "random seed")->capture_default_str();
  dep->add_option("--dot", dep_dot, "DOT output path");
  dep->add_option("--beta", dep_beta, "suffix fraction")->capture_default_str();
  dep->callback([&] { cmd_depgraph(dep_input, dep_seed, dep_dot, dep_beta); });

  // cluster
  auto* cluster = app.add_subcommand("cluster", "CC-Pivot correlation clustering");
  std::string cluster_input;
  std::uint64_t cluster_seed = 0;
  bool cluster_oracle = false;
  cluster->add_option("--signed", cluster_input, "signed complete graph file")->required();
  cluster->add_option("--seed", cluster_seed, "random seed")->capture_default_str();
  cluster->add_flag("--oracle", cluster_oracle, "add the brute-force optimum (n <= 10)");
  cluster->callback([&] { cmd_cluster(cluster_input, cluster_seed, cluster_oracle); });

  // match
  auto* match = app.add_subcommand("match", "greedy maximal matching via the line graph");
  std::string match_input;
  std::uint64_t match_seed = 0;
  match->add_option("--input", match_input, "edge-list file")->required();
  match->add_option("--seed", match_seed, "random seed")->capture_default_str();
  match->callback([&] { cmd_match(match_input, match_seed); });

  // color
  auto* color = app.add_subcommand("color", "greedy (delta+1)-coloring via the copy reduction");
  std::string color_input;
  std::int64_t color_delta = -1;
  std::uint64_t color_seed = 0;
  color->add_option("--input", color_input, "edge-list file")->required();
  color->add_option("--delta", color_delta, "max degree bound (default: actual max degree)");
  color->add_option("--seed", color_seed, "random seed")->capture_default_str();
  color->callback([&] { cmd_color(color_input, color_delta, color_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gmis::invariant_violation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
