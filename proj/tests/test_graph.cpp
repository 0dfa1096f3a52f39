#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>
#include <vector>

#include "gmis/generators.hpp"
#include "gmis/graph.hpp"
#include "gmis/reductions.hpp"
#include "gmis/rng.hpp"
#include "gmis/signed_graph.hpp"

using namespace gmis;

namespace {

Graph random_graph(std::uint32_t n, double p, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return gen_gnp(n, p, rng);
}

}  // namespace

TEST_CASE("build_graph produces a canonical CSR graph") {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}});
  REQUIRE(g.n() == 3);
  REQUIRE(g.m() == 2);
  REQUIRE(g.validate());
  REQUIRE(g.degree(1) == 2);
  REQUIRE(g.has_edge(1, 0));
  REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("build_graph collapses duplicate pairs in either orientation") {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}});
  REQUIRE(g.m() == 1);
  REQUIRE(g.validate());
}

TEST_CASE("build_graph rejects self-loops and bad endpoints") {
  REQUIRE_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("edge list round trip preserves the graph") {
  const Graph g = random_graph(40, 0.2, 99);
  std::stringstream buffer;
  write_edge_list(g, buffer);
  const Graph back = read_edge_list(buffer);
  REQUIRE(back.n() == g.n());
  REQUIRE(back.m() == g.m());
  for (VertexId v = 0; v < g.n(); ++v) {
    auto a = g.neighbors(v);
    auto b = back.neighbors(v);
    REQUIRE(std::vector<VertexId>(a.begin(), a.end()) ==
            std::vector<VertexId>(b.begin(), b.end()));
  }
}

TEST_CASE("edge list reader rejects malformed input") {
  std::stringstream missing("3");
  REQUIRE_THROWS_AS(read_edge_list(missing), std::invalid_argument);
  std::stringstream truncated("3 2\n0 1\n");
  REQUIRE_THROWS_AS(read_edge_list(truncated), std::invalid_argument);
  std::stringstream out_of_range("2 1\n0 5\n");
  REQUIRE_THROWS_AS(read_edge_list(out_of_range), std::invalid_argument);
}

TEST_CASE("gen_gnp extremes") {
  RngStream rng(1, 0);
  const Graph empty = gen_gnp(50, 0.0, rng);
  REQUIRE(empty.m() == 0);
  const Graph complete = gen_gnp(50, 1.0, rng);
  REQUIRE(complete.m() == 50ull * 49 / 2);
  REQUIRE(complete.validate());
  REQUIRE_THROWS_AS(gen_gnp(10, 1.5, rng), std::invalid_argument);
  REQUIRE_THROWS_AS(gen_gnp(10, -0.1, rng), std::invalid_argument);
}

TEST_CASE("gen_gnp edge count matches the binomial moments") {
  // C(1000,2) pairs at p=0.01: mean ~4995, sd ~70.3; assert within 5 sd.
  const Graph g = random_graph(1000, 0.01, 123456);
  REQUIRE(g.validate());
  const double mean = 999.0 * 1000.0 / 2.0 * 0.01;
  const double sigma = std::sqrt(999.0 * 1000.0 / 2.0 * 0.01 * 0.99);
  REQUIRE(std::abs(static_cast<double>(g.m()) - mean) <= 5.0 * sigma);
}

TEST_CASE("gen_gnp is deterministic for a fixed seed") {
  const Graph a = random_graph(300, 0.05, 777);
  const Graph b = random_graph(300, 0.05, 777);
  REQUIRE(a.m() == b.m());
  for (VertexId v = 0; v < a.n(); ++v) {
    auto na = a.neighbors(v);
    auto nb = b.neighbors(v);
    REQUIRE(std::vector<VertexId>(na.begin(), na.end()) ==
            std::vector<VertexId>(nb.begin(), nb.end()));
  }
  const Graph c = random_graph(300, 0.05, 778);
  REQUIRE((a.m() != c.m() || a.edges() != c.edges()));
}

TEST_CASE("generated graphs pass the structural validator") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(120, 0.08, seed);
    REQUIRE(g.validate());
  }
}

TEST_CASE("lower-bound construction at n=1024") {
  const LowerBoundParams params = lower_bound_params(1024);
  REQUIRE(params.l == 2);
  REQUIRE(params.components == 32);
  REQUIRE(params.component_size == 7);
  const Graph g = gen_lower_bound_graph(1024);
  REQUIRE(g.n() == 1024);
  REQUIRE(g.validate());
  // per component: 0+1+6 clique edges and 2+8 bipartite edges
  REQUIRE(g.m() == 32ull * 17);
  std::uint32_t isolated = 0;
  for (VertexId v = 0; v < g.n(); ++v) isolated += g.degree(v) == 0;
  REQUIRE(isolated == 1024 - 32 * 7);
}

TEST_CASE("lower-bound construction at the minimum size") {
  const LowerBoundParams params = lower_bound_params(32);
  REQUIRE(params.l == 1);
  REQUIRE(params.component_size == 3);
  const Graph g = gen_lower_bound_graph(32);
  REQUIRE(g.n() == 32);
  // 5 components, each one clique edge inside U_1 plus 2 bipartite edges
  REQUIRE(params.components == 5);
  REQUIRE(g.m() == 5ull * 3);
  REQUIRE_THROWS_AS(gen_lower_bound_graph(31), std::invalid_argument);
}

TEST_CASE("lower-bound degrees follow the layer formula") {
  for (std::uint32_t n : {32u, 1024u, 5000u, 70000u}) {
    const LowerBoundParams params = lower_bound_params(n);
    const Graph g = gen_lower_bound_graph(n);
    REQUIRE(g.n() == n);
    for (std::uint32_t k = 0; k < params.components; ++k) {
      VertexId v = k * params.component_size;
      for (std::uint32_t i = 0; i <= params.l; ++i) {
        const std::uint32_t size = 1u << i;
        std::uint32_t expected = size - 1;                    // clique inside the layer
        if (i > 0) expected += 1u << (i - 1);                 // layer below
        if (i < params.l) expected += 1u << (i + 1);          // layer above
        for (std::uint32_t a = 0; a < size; ++a) REQUIRE(g.degree(v + a) == expected);
        v += size;
      }
    }
    for (VertexId v = params.components * params.component_size; v < n; ++v)
      REQUIRE(g.degree(v) == 0);
  }
}

namespace {

// brute-force incidence check used as the line-graph oracle
bool edges_share_endpoint(const Edge& a, const Edge& b) {
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

}  // namespace

TEST_CASE("line graph of small shapes") {
  const Graph triangle = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const LineGraph lt = line_graph(triangle);
  REQUIRE(lt.graph.n() == 3);
  REQUIRE(lt.graph.m() == 3);

  const Graph path4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const LineGraph lp = line_graph(path4);
  REQUIRE(lp.graph.n() == 3);
  REQUIRE(lp.graph.m() == 2);

  const Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const LineGraph ls = line_graph(star);
  REQUIRE(ls.graph.n() == 4);
  REQUIRE(ls.graph.m() == 6);  // K_4
}

TEST_CASE("line graph matches brute-force incidence on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_graph(2 + seed % 30, 0.3, 5000 + seed);
    const LineGraph lg = line_graph(g);
    const auto host_edges = g.edges();
    REQUIRE(lg.graph.n() == host_edges.size());
    for (std::uint32_t e = 0; e < host_edges.size(); ++e) {
      const auto [u, v] = host_edges[e];
      REQUIRE(lg.edge_of_vertex[e] == host_edges[e]);
      REQUIRE(lg.vertex_of_edge(g, v, u) == e);
      REQUIRE(lg.graph.degree(e) == g.degree(u) + g.degree(v) - 2);
      for (std::uint32_t f = 0; f < host_edges.size(); ++f) {
        if (e == f) continue;
        REQUIRE(lg.graph.has_edge(e, f) == edges_share_endpoint(host_edges[e], host_edges[f]));
      }
    }
  }
}

TEST_CASE("coloring reduction of a single vertex is a clique over its copies") {
  const Graph one = build_graph(1, {});
  const ColoringReduction red = coloring_reduction_graph(one, 2);
  REQUIRE(red.graph.n() == 3);
  REQUIRE(red.graph.m() == 3);  // triangle
}

TEST_CASE("coloring reduction of K_2 with delta=1 is a 4-cycle") {
  const Graph k2 = build_graph(2, {{0, 1}});
  const ColoringReduction red = coloring_reduction_graph(k2, 1);
  REQUIRE(red.graph.n() == 4);
  REQUIRE(red.graph.m() == 4);
  for (VertexId v = 0; v < 4; ++v) REQUIRE(red.graph.degree(v) == 2);
}

TEST_CASE("coloring reduction vertex and edge counts") {
  const Graph g = random_graph(40, 0.15, 4242);
  const std::uint32_t delta = g.max_degree();
  for (std::uint32_t extra : {0u, 2u}) {
    const std::uint32_t d = delta + extra;
    const ColoringReduction red = coloring_reduction_graph(g, d);
    REQUIRE(red.graph.n() == g.n() * (d + 1));
    REQUIRE(red.graph.m() ==
            g.m() * (d + 1) + static_cast<std::uint64_t>(g.n()) * (d + 1) * d / 2);
  }
  REQUIRE_THROWS_AS(coloring_reduction_graph(g, delta - 1), std::invalid_argument);
}

TEST_CASE("signed complete graph stores labels symmetrically") {
  SignedCompleteGraph s(4);
  REQUIRE(s.pair_count() == 6);
  s.set_label(2, 0, true);
  REQUIRE(s.is_plus(0, 2));
  REQUIRE(s.is_plus(2, 0));
  REQUIRE_FALSE(s.is_plus(1, 3));
  REQUIRE_THROWS_AS(s.is_plus(1, 1), std::invalid_argument);
}

TEST_CASE("signed graph text format round trips, unlisted pairs default to minus") {
  std::stringstream in("4\n0 1 +\n2 3 +\n1 2 -\n");
  const SignedCompleteGraph s = read_signed_graph(in);
  REQUIRE(s.n() == 4);
  REQUIRE(s.is_plus(0, 1));
  REQUIRE(s.is_plus(2, 3));
  REQUIRE_FALSE(s.is_plus(1, 2));
  REQUIRE_FALSE(s.is_plus(0, 3));

  std::stringstream buffer;
  write_signed_graph(s, buffer);
  const SignedCompleteGraph back = read_signed_graph(buffer);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) REQUIRE(back.is_plus(u, v) == s.is_plus(u, v));

  std::stringstream bad("3\n0 1 x\n");
  REQUIRE_THROWS_AS(read_signed_graph(bad), std::invalid_argument);
  std::stringstream truncated("3\n0 1\n");
  REQUIRE_THROWS_AS(read_signed_graph(truncated), std::invalid_argument);
}
