#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

#include "gmis/dependency.hpp"
#include "gmis/generators.hpp"
#include "gmis/mis.hpp"
#include "oracles.hpp"

using namespace gmis;
using gmis::testing::brute_force_dependency_length;

namespace {

Permutation perm_of(std::vector<VertexId> order) { return Permutation::from_order(std::move(order)); }

struct Instance {
  Graph graph;
  Permutation perm;
};

Instance random_instance(std::uint32_t n, double p, std::uint64_t seed) {
  RngStream graph_rng(seed, 0);
  RngStream perm_rng(seed, 1);
  return {gen_gnp(n, p, graph_rng), random_permutation(n, perm_rng)};
}

std::vector<Edge> arcs_of(const DependencyDag& dag) {
  std::vector<Edge> arcs;
  for (VertexId v = 0; v < dag.n; ++v)
    for (VertexId w : dag.arcs_from(v)) arcs.emplace_back(v, w);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::uint32_t implementation_dependency_length(const Graph& g, const Permutation& perm) {
  const MisRun run = sequential_greedy(g, perm);
  return dependency_length(build_dependency_dag(g, perm, run));
}

}  // namespace

TEST_CASE("dependency arcs of the identity-order path") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const Permutation perm = perm_of({0, 1, 2});
  const DependencyDag dag = build_dependency_dag(path, perm, sequential_greedy(path, perm));
  REQUIRE(arcs_of(dag) == std::vector<Edge>{{0, 1}, {1, 2}});
  REQUIRE(dag.validate());
  REQUIRE(dependency_length(dag) == 3);
}

TEST_CASE("dependency arcs of a triangle stop at the inhibited vertices") {
  const Graph triangle = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const Permutation perm = perm_of({1, 2, 0});
  const DependencyDag dag = build_dependency_dag(triangle, perm, sequential_greedy(triangle, perm));
  REQUIRE(arcs_of(dag) == std::vector<Edge>{{1, 0}, {1, 2}});
  REQUIRE(dependency_length(dag) == 1);
}

TEST_CASE("isolated vertices have no dependency arcs") {
  const Graph isolated = build_graph(4, {});
  const Permutation perm = perm_of({2, 0, 3, 1});
  const DependencyDag dag = build_dependency_dag(isolated, perm, sequential_greedy(isolated, perm));
  REQUIRE(dag.arc_count() == 0);
  REQUIRE(dependency_length(dag) == 1);
}

TEST_CASE("single vertex graph has dependency length one") {
  const Graph one = build_graph(1, {});
  const Permutation perm = perm_of({0});
  REQUIRE(implementation_dependency_length(one, perm) == 1);
}

TEST_CASE("star with the center first has dependency length one") {
  const Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  REQUIRE(implementation_dependency_length(star, perm_of({0, 1, 2, 3, 4})) == 1);
}

TEST_CASE("build_dependency_dag rejects inconsistent runs") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const Permutation perm = perm_of({0, 1, 2});
  MisRun wrong = sequential_greedy(path, perm);
  wrong.in_mis[1] = 1;  // not the greedy MIS
  REQUIRE_THROWS_AS(build_dependency_dag(path, perm, wrong), std::invalid_argument);
  const Permutation other = perm_of({1, 0, 2});
  REQUIRE_THROWS_AS(
      build_dependency_dag(path, other, sequential_greedy(path, perm)),
      std::invalid_argument);
}

TEST_CASE("dag arcs increase position and alternate parity on random instances") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto inst = random_instance(2 + seed % 50, 0.25, 1700 + seed);
    const DependencyDag dag =
        build_dependency_dag(inst.graph, inst.perm, sequential_greedy(inst.graph, inst.perm));
    REQUIRE(dag.validate());
  }
}

TEST_CASE("dependency length matches exhaustive enumeration of position subsets") {
  // all orders for n <= 6, sampled orders for n = 7, 8
  for (std::uint32_t n = 4; n <= 6; ++n) {
    for (std::uint64_t gseed = 0; gseed < 6; ++gseed) {
      RngStream graph_rng(2200 + gseed, n);
      const Graph g = gen_gnp(n, 0.4, graph_rng);
      std::vector<VertexId> order(n);
      for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
      do {
        const Permutation perm = Permutation::from_order(order);
        REQUIRE(implementation_dependency_length(g, perm) ==
                brute_force_dependency_length(g, perm));
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  for (std::uint32_t n = 7; n <= 8; ++n) {
    for (std::uint64_t gseed = 0; gseed < 4; ++gseed) {
      RngStream graph_rng(2300 + gseed, n);
      const Graph g = gen_gnp(n, 0.35, graph_rng);
      RngStream perm_rng(2400 + gseed, n);
      for (int trial = 0; trial < 200; ++trial) {
        const Permutation perm = random_permutation(n, perm_rng);
        REQUIRE(implementation_dependency_length(g, perm) ==
                brute_force_dependency_length(g, perm));
      }
    }
  }
}

TEST_CASE("longest increasing path on the small shapes") {
  const Graph k2 = build_graph(2, {{0, 1}});
  REQUIRE(longest_increasing_path(k2, perm_of({0, 1})) == 2);
  REQUIRE(longest_increasing_path(k2, perm_of({1, 0})) == 2);

  // path 0-1-2 with order (0, 2, 1): increasing paths have two vertices
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  REQUIRE(longest_increasing_path(path, perm_of({0, 2, 1})) == 2);

  const Graph isolated = build_graph(5, {});
  REQUIRE(longest_increasing_path(isolated, perm_of({4, 2, 0, 1, 3})) == 1);
}

TEST_CASE("max_suffix_degree collapses on a clique and vanishes without edges") {
  RngStream rng(31, 0);
  const Graph complete = gen_gnp(24, 1.0, rng);
  REQUIRE(max_suffix_degree(complete, perm_of([] {
            std::vector<VertexId> o(24);
            for (std::uint32_t i = 0; i < 24; ++i) o[i] = i;
            return o;
          }()),
                            0.5) == 0);
  const Graph isolated = build_graph(6, {});
  REQUIRE(max_suffix_degree(isolated, perm_of({0, 1, 2, 3, 4, 5}), 0.3) == 0);
  REQUIRE_THROWS_AS(max_suffix_degree(isolated, perm_of({0, 1, 2, 3, 4, 5}), 0.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(max_suffix_degree(isolated, perm_of({0, 1, 2, 3, 4, 5}), 1.0),
                    std::invalid_argument);
}

TEST_CASE("suffix degree stays under the soft logarithmic ceiling") {
  const std::uint32_t n = 1 << 12;
  const double beta = 0.01;
  const double ceiling = (4.0 / beta) * std::log(static_cast<double>(n));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance(n, 10.0 / n, 5200 + seed);
    REQUIRE(max_suffix_degree(inst.graph, inst.perm, beta) <= ceiling);
  }
}

TEST_CASE("round bound examples") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const Permutation perm = perm_of({0, 1, 2});
  const MisRun par = parallel_greedy(path, perm);
  REQUIRE(par.num_rounds == 2);
  REQUIRE(check_round_bound(par, 3));

  const Graph one = build_graph(1, {});
  const MisRun single = parallel_greedy(one, perm_of({0}));
  REQUIRE(check_round_bound(single, 1));

  REQUIRE_THROWS_AS(check_round_bound(par, 4), std::invalid_argument);
}

TEST_CASE("rounds, dependency length and increasing paths obey the exact inequalities") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = random_instance(1 + seed % 120, seed % 2 ? 0.15 : 0.4, 8800 + seed);
    const MisRun par = parallel_greedy(inst.graph, inst.perm);
    const std::uint32_t dep = implementation_dependency_length(inst.graph, inst.perm);
    const std::uint32_t inc = longest_increasing_path(inst.graph, inst.perm);
    if (inst.graph.n() == 0) continue;
    REQUIRE(check_round_bound(par, dep));
    REQUIRE(par.num_rounds <= inc);
    REQUIRE(dep <= inc);
  }
}

TEST_CASE("DOT export lists every vertex and arc") {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const Permutation perm = perm_of({0, 1, 2});
  const DependencyDag dag = build_dependency_dag(path, perm, sequential_greedy(path, perm));
  std::ostringstream out;
  write_dot(dag, out);
  const std::string dot = out.str();
  REQUIRE(dot.find("digraph dependency") != std::string::npos);
  REQUIRE(dot.find("v0 -> v1") != std::string::npos);
  REQUIRE(dot.find("v1 -> v2") != std::string::npos);
  REQUIRE(dot.find("doublecircle") != std::string::npos);
}
