#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gmis/applications.hpp"
#include "gmis/dependency.hpp"
#include "gmis/generators.hpp"
#include "gmis/graph.hpp"
#include "gmis/mis.hpp"
#include "gmis/permutation.hpp"
#include "gmis/rng.hpp"

namespace gmis {

enum class Algorithm { parallel, sequential, slowed, luby, matching, coloring };

inline const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::parallel: return "parallel";
    case Algorithm::sequential: return "sequential";
    case Algorithm::slowed: return "slowed";
    case Algorithm::luby: return "luby";
    case Algorithm::matching: return "matching";
    case Algorithm::coloring: return "coloring";
  }
  return "?";
}

inline Algorithm algorithm_from_name(const std::string& name) {
  for (Algorithm a : {Algorithm::parallel, Algorithm::sequential, Algorithm::slowed,
                      Algorithm::luby, Algorithm::matching, Algorithm::coloring})
    if (name == algorithm_name(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

enum class Workload { gnp, lower_bound, file };

inline Workload workload_from_name(const std::string& name) {
  if (name == "gnp") return Workload::gnp;
  if (name == "lower_bound") return Workload::lower_bound;
  if (name == "file") return Workload::file;
  throw std::invalid_argument("unknown workload '" + name + "'");
}

struct ExperimentConfig {
  Workload workload = Workload::gnp;
  std::vector<std::uint32_t> n_values;
  double p_or_param = 8.0;    // gnp edge probability; interpreted per p_is_times_n
  bool p_is_times_n = true;   // true: p = p_or_param / n
  std::string input_path;     // workload == file
  std::uint32_t trials = 1;
  std::uint64_t master_seed = 0;
  double beta = 0.005;
  std::vector<Algorithm> algorithms = {Algorithm::parallel};
  std::uint32_t dep_max_n = 1u << 18;  // skip dependency stats on larger graphs
  std::uint32_t threads = 0;           // 0 = hardware concurrency
};

struct TrialRecord {
  std::uint32_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t trial = 0;
  Algorithm algorithm = Algorithm::parallel;
  std::uint32_t num_rounds = 0;
  std::uint64_t mis_size = 0;
  std::optional<std::uint32_t> dependency_length;
  std::optional<std::uint32_t> longest_increasing_path;
  std::optional<std::uint32_t> max_suffix_degree;
  double wall_time_ms = 0.0;
};

namespace detail {

// Stream derivation for trial (n, trial_index) and a purpose tag
// (0 graph, 1 order, 2 luby, 3 matching, 4 coloring). Mixing n and the
// trial index separately means extending a sweep with new n values
// never perturbs existing trials.
inline std::uint64_t trial_stream_index(std::uint64_t n, std::uint64_t trial,
                                        std::uint64_t purpose) {
  return mix64(mix64(n) ^ mix64(trial + 1) ^ (purpose * 0x9E3779B97F4A7C15ull));
}

inline void validate_config(const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (cfg.workload != Workload::file) {
    if (cfg.n_values.empty()) throw std::invalid_argument("config: n_values must be non-empty");
    if (!std::is_sorted(cfg.n_values.begin(), cfg.n_values.end()) ||
        std::adjacent_find(cfg.n_values.begin(), cfg.n_values.end()) != cfg.n_values.end())
      throw std::invalid_argument("config: n_values must be strictly ascending");
  }
  if (cfg.algorithms.empty()) throw std::invalid_argument("config: no algorithms selected");
  for (Algorithm a : cfg.algorithms)
    if (a == Algorithm::sequential)
      throw std::invalid_argument("config: sequential is not a benchmark algorithm");
  if (cfg.workload == Workload::gnp) {
    if (cfg.p_or_param < 0.0) throw std::invalid_argument("config: negative gnp parameter");
    if (!cfg.p_is_times_n && cfg.p_or_param > 1.0)
      throw std::invalid_argument("config: absolute p must be in [0,1]");
  }
  if (!(cfg.beta > 0.0 && cfg.beta < 1.0))
    throw std::invalid_argument("config: beta must lie in (0,1)");
}

struct TimedMs {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace detail

// Runs every (n, trial) cell of the config on a bounded worker pool and
// emits one record per selected algorithm, sorted by
// (n, trial, algorithm) so concurrency never affects the output.
inline std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
  detail::validate_config(cfg);

  Graph file_graph;
  if (cfg.workload == Workload::file) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::invalid_argument("cannot open input file '" + cfg.input_path + "'");
    file_graph = read_edge_list(in);
  }
  const std::vector<std::uint32_t> n_values =
      cfg.workload == Workload::file ? std::vector<std::uint32_t>{file_graph.n()} : cfg.n_values;

  struct Task {
    std::uint32_t n;
    std::uint32_t trial;
  };
  std::vector<Task> tasks;
  tasks.reserve(n_values.size() * cfg.trials);
  for (std::uint32_t n : n_values)
    for (std::uint32_t t = 0; t < cfg.trials; ++t) tasks.push_back({n, t});

  std::vector<std::vector<TrialRecord>> slots(tasks.size());

  auto run_task = [&](const Task& task) {
    std::vector<TrialRecord>& out = slots[&task - tasks.data()];
    const std::uint32_t n = task.n;

    Graph generated;
    const Graph* g = nullptr;
    switch (cfg.workload) {
      case Workload::gnp: {
        const double p =
            cfg.p_is_times_n ? std::min(1.0, cfg.p_or_param / std::max(1u, n)) : cfg.p_or_param;
        RngStream graph_rng(cfg.master_seed, detail::trial_stream_index(n, task.trial, 0));
        generated = gen_gnp(n, p, graph_rng);
        g = &generated;
        break;
      }
      case Workload::lower_bound:
        generated = gen_lower_bound_graph(n);
        g = &generated;
        break;
      case Workload::file:
        g = &file_graph;
        break;
    }

    RngStream perm_rng(cfg.master_seed, detail::trial_stream_index(n, task.trial, 1));
    const Permutation perm = random_permutation(g->n(), perm_rng);

    const bool want_order_stats =
        std::find(cfg.algorithms.begin(), cfg.algorithms.end(), Algorithm::parallel) !=
            cfg.algorithms.end() ||
        std::find(cfg.algorithms.begin(), cfg.algorithms.end(), Algorithm::slowed) !=
            cfg.algorithms.end();
    std::optional<std::uint32_t> dep_len, inc_path, suffix_deg;
    if (want_order_stats && g->n() <= cfg.dep_max_n && g->n() > 0) {
      const MisRun seq = sequential_greedy(*g, perm);
      const DependencyDag dag = build_dependency_dag(*g, perm, seq);
      dep_len = dependency_length(dag);
      inc_path = longest_increasing_path(*g, perm);
      suffix_deg = max_suffix_degree(*g, perm, cfg.beta);
    }

    for (Algorithm algo : cfg.algorithms) {
      TrialRecord rec;
      rec.n = g->n();
      rec.m = g->m();
      rec.trial = task.trial;
      rec.algorithm = algo;
      detail::TimedMs timer;
      switch (algo) {
        case Algorithm::parallel: {
          const MisRun run = parallel_greedy(*g, perm);
          rec.wall_time_ms = timer.elapsed();
          rec.num_rounds = run.num_rounds;
          rec.mis_size = run.mis_size();
          rec.dependency_length = dep_len;
          rec.longest_increasing_path = inc_path;
          rec.max_suffix_degree = suffix_deg;
          if (!verify_mis(*g, run.in_mis))
            throw invariant_violation("parallel result is not a maximal independent set");
          if (dep_len && !check_round_bound(run, *dep_len))
            throw invariant_violation("round bound violated: " + std::to_string(run.num_rounds) +
                                      " rounds vs dependency length " + std::to_string(*dep_len));
          if (inc_path && run.num_rounds > *inc_path)
            throw invariant_violation("rounds exceed the longest increasing path");
          break;
        }
        case Algorithm::slowed: {
          const MisRun run = slowed_parallel_greedy(*g, perm);
          rec.wall_time_ms = timer.elapsed();
          rec.num_rounds = run.num_rounds;
          rec.mis_size = run.mis_size();
          rec.dependency_length = dep_len;
          rec.longest_increasing_path = inc_path;
          rec.max_suffix_degree = suffix_deg;
          if (!verify_mis(*g, run.in_mis))
            throw invariant_violation("slowed result is not a maximal independent set");
          break;
        }
        case Algorithm::luby: {
          RngStream rng(cfg.master_seed, detail::trial_stream_index(n, task.trial, 2));
          const MisRun run = luby(*g, rng);
          rec.wall_time_ms = timer.elapsed();
          rec.num_rounds = run.num_rounds;
          rec.mis_size = run.mis_size();
          if (!verify_mis(*g, run.in_mis))
            throw invariant_violation("luby result is not a maximal independent set");
          break;
        }
        case Algorithm::matching: {
          RngStream rng(cfg.master_seed, detail::trial_stream_index(n, task.trial, 3));
          const MatchingResult res = greedy_maximal_matching(*g, rng);
          rec.wall_time_ms = timer.elapsed();
          rec.num_rounds = res.rounds;
          rec.mis_size = res.matching.edges.size();
          if (!verify_matching(*g, res.matching))
            throw invariant_violation("matching validator failed");
          break;
        }
        case Algorithm::coloring: {
          RngStream rng(cfg.master_seed, detail::trial_stream_index(n, task.trial, 4));
          const std::uint32_t delta = g->max_degree();
          const ColoringResult res = greedy_coloring(*g, delta, rng);
          rec.wall_time_ms = timer.elapsed();
          rec.num_rounds = res.rounds;
          rec.mis_size = g->n();
          if (!verify_coloring(*g, res.coloring, delta))
            throw invariant_violation("coloring validator failed");
          break;
        }
        case Algorithm::sequential:
          break;  // rejected by validate_config
      }
      out.push_back(rec);
    }
  };

  std::uint32_t threads = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::min<std::uint32_t>(std::max(1u, threads),
                                    static_cast<std::uint32_t>(tasks.size()));
  if (threads <= 1) {
    for (const Task& t : tasks) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        try {
          run_task(tasks[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::uint32_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  std::vector<TrialRecord> records;
  for (auto& slot : slots)
    for (auto& rec : slot) records.push_back(rec);
  std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.trial != b.trial) return a.trial < b.trial;
    return static_cast<int>(a.algorithm) < static_cast<int>(b.algorithm);
  });
  return records;
}

struct LogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t k = values.size();
  return k % 2 ? values[k / 2] : 0.5 * (values[k / 2 - 1] + values[k / 2]);
}

// Ordinary least squares of the per-n median round count against
// log2(n). r_squared is 1 for a degenerate constant target.
inline LogFit fit_log_scaling(const std::vector<TrialRecord>& records) {
  std::vector<std::pair<std::uint32_t, std::vector<double>>> groups;
  for (const TrialRecord& rec : records) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == rec.n; });
    if (it == groups.end()) {
      groups.emplace_back(rec.n, std::vector<double>{});
      it = std::prev(groups.end());
    }
    it->second.push_back(static_cast<double>(rec.num_rounds));
  }
  if (groups.size() < 3)
    throw std::invalid_argument("fit_log_scaling: need at least 3 distinct n values");

  std::vector<double> xs, ys;
  for (auto& [n, rounds] : groups) {
    xs.push_back(std::log2(static_cast<double>(n)));
    ys.push_back(median(std::move(rounds)));
  }
  const auto k = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= k;
  mean_y /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    syy += (ys[i] - mean_y) * (ys[i] - mean_y);
  }
  LogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fitted = fit.intercept + fit.slope * xs[i];
    ss_res += (ys[i] - fitted) * (ys[i] - fitted);
  }
  fit.r_squared = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

// Fraction of trials on the layered lower-bound graph whose parallel
// round count reaches ceil((l+1)/2). The graph depends only on n and is
// generated once; each trial draws its own order.
inline double lower_bound_experiment(std::uint32_t n, std::uint32_t trials,
                                     std::uint64_t master_seed) {
  if (trials < 1) throw std::invalid_argument("lower_bound_experiment: trials must be >= 1");
  const LowerBoundParams params = lower_bound_params(n);
  const Graph g = gen_lower_bound_graph(n);
  std::uint32_t hits = 0;
  for (std::uint32_t trial = 0; trial < trials; ++trial) {
    RngStream rng(master_seed, detail::trial_stream_index(n, trial, 1));
    const Permutation perm = random_permutation(n, rng);
    const MisRun run = parallel_greedy(g, perm);
    if (run.num_rounds >= params.round_threshold()) ++hits;
  }
  return static_cast<double>(hits) / trials;
}

// CSV schema (fixed order): n,m,trial,algorithm,rounds,mis_size,
// dep_len,inc_path,suffix_deg,wall_ms. Optional statistics print as
// empty cells. wall_ms prints 0 unless timing output is requested, so
// default output is byte-deterministic.
inline void write_csv(const std::vector<TrialRecord>& records, std::ostream& out,
                      bool include_timing = false) {
  out << "n,m,trial,algorithm,rounds,mis_size,dep_len,inc_path,suffix_deg,wall_ms\n";
  auto cell = [](const std::optional<std::uint32_t>& v) {
    return v ? std::to_string(*v) : std::string{};
  };
  for (const TrialRecord& rec : records) {
    out << rec.n << ',' << rec.m << ',' << rec.trial << ',' << algorithm_name(rec.algorithm)
        << ',' << rec.num_rounds << ',' << rec.mis_size << ',' << cell(rec.dependency_length)
        << ',' << cell(rec.longest_increasing_path) << ',' << cell(rec.max_suffix_degree) << ',';
    if (include_timing) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3f", rec.wall_time_ms);
      out << buf;
    } else {
      out << 0;
    }
    out << '\n';
  }
}

}  // namespace gmis
