#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gmis/graph.hpp"
#include "gmis/mis.hpp"
#include "gmis/permutation.hpp"
#include "gmis/reductions.hpp"
#include "gmis/rng.hpp"
#include "gmis/signed_graph.hpp"

namespace gmis {

struct Matching {
  std::vector<Edge> edges;
};

struct MatchingResult {
  Matching matching;
  std::uint32_t rounds = 0;
};

// No two matched edges share an endpoint, and no host edge has both
// endpoints unmatched.
inline bool verify_matching(const Graph& g, const Matching& matching) {
  std::vector<std::uint8_t> matched(g.n(), 0);
  for (const auto& [u, v] : matching.edges) {
    if (u >= g.n() || v >= g.n() || !g.has_edge(u, v)) return false;
    if (matched[u] || matched[v]) return false;
    matched[u] = matched[v] = 1;
  }
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.neighbors(u))
      if (!matched[u] && !matched[v]) return false;
  return true;
}

// Greedy maximal matching = greedy MIS on the line graph under a random
// edge order. rounds is the parallel round count on the line graph.
inline MatchingResult greedy_maximal_matching(const Graph& g, RngStream& rng) {
  const LineGraph lg = line_graph(g);
  const Permutation perm = random_permutation(lg.graph.n(), rng);
  const MisRun run = parallel_greedy(lg.graph, perm);
  MatchingResult result;
  result.rounds = run.num_rounds;
  for (std::uint32_t e = 0; e < lg.graph.n(); ++e)
    if (run.in_mis[e]) result.matching.edges.push_back(lg.edge_of_vertex[e]);
  return result;
}

struct Coloring {
  std::vector<std::uint32_t> color;  // per vertex, in [0, delta]
};

struct ColoringResult {
  Coloring coloring;
  std::uint32_t rounds = 0;
};

inline bool verify_coloring(const Graph& g, const Coloring& coloring, std::uint32_t delta) {
  if (coloring.color.size() != g.n()) return false;
  for (VertexId v = 0; v < g.n(); ++v) {
    if (coloring.color[v] > delta) return false;
    for (VertexId u : g.neighbors(v))
      if (coloring.color[u] == coloring.color[v]) return false;
  }
  return true;
}

// Greedy (delta+1)-coloring via the copies-plus-cliques reduction: a
// random order of the vertex-color pairs, greedy MIS on the reduction
// graph, vertex v gets color c iff pair (v, c) is in the MIS.
inline ColoringResult greedy_coloring(const Graph& g, std::uint32_t delta, RngStream& rng) {
  const ColoringReduction red = coloring_reduction_graph(g, delta);
  const Permutation perm = random_permutation(red.graph.n(), rng);
  const MisRun run = parallel_greedy(red.graph, perm);
  ColoringResult result;
  result.rounds = run.num_rounds;
  result.coloring.color.assign(g.n(), kNoVertex);
  for (std::uint32_t pv = 0; pv < red.graph.n(); ++pv) {
    if (!run.in_mis[pv]) continue;
    const VertexId host = red.host_vertex(pv);
    // maximality gives every vertex at least one color, the clique at
    // most one
    if (result.coloring.color[host] != kNoVertex)
      throw invariant_violation("vertex received two colors");
    result.coloring.color[host] = red.color_of(pv);
  }
  for (VertexId v = 0; v < g.n(); ++v)
    if (result.coloring.color[v] == kNoVertex)
      throw invariant_violation("vertex left uncolored");
  return result;
}

// Correlation clustering of a signed complete graph: every node maps to
// its pivot; pivots are the greedy MIS of the '+'-graph and map to
// themselves.
struct Clustering {
  std::vector<VertexId> cluster_of;
  std::vector<VertexId> pivots;
};

// CC-Pivot: pivots are the greedy MIS of the '+'-graph for the given
// order; each non-pivot joins the cluster of its inhibitor (its
// lowest-position '+'-neighbor among the pivots).
inline Clustering cc_pivot(const SignedCompleteGraph& s, const Permutation& perm) {
  if (perm.size() != s.n())
    throw std::invalid_argument("cc_pivot: permutation size does not match node count");
  const Graph plus = s.plus_graph();
  const MisRun run = sequential_greedy(plus, perm);
  Clustering c;
  c.cluster_of.resize(s.n());
  for (VertexId v = 0; v < s.n(); ++v) {
    if (run.in_mis[v]) {
      c.cluster_of[v] = v;
      c.pivots.push_back(v);
    } else {
      c.cluster_of[v] = run.inhibitor[v];
    }
  }
  return c;
}

// Exact disagreement count: '-' pairs inside a cluster plus '+' pairs
// across clusters.
inline std::uint64_t cc_cost(const SignedCompleteGraph& s, const Clustering& c) {
  if (c.cluster_of.size() != s.n())
    throw std::invalid_argument("cc_cost: clustering does not cover all nodes");
  for (VertexId v = 0; v < s.n(); ++v)
    if (c.cluster_of[v] >= s.n())
      throw std::invalid_argument("cc_cost: node " + std::to_string(v) + " is unclustered");
  std::uint64_t cost = 0;
  for (VertexId u = 0; u + 1 < s.n(); ++u)
    for (VertexId v = u + 1; v < s.n(); ++v) {
      const bool together = c.cluster_of[u] == c.cluster_of[v];
      if (s.is_plus(u, v) != together) ++cost;
    }
  return cost;
}

// Minimum disagreement count over all set partitions, enumerated via
// restricted-growth strings. Bell(10) = 115975 keeps n <= 10 cheap;
// larger inputs are refused.
inline std::uint64_t brute_force_cc_opt(const SignedCompleteGraph& s) {
  const std::uint32_t n = s.n();
  if (n > 10) throw std::invalid_argument("brute_force_cc_opt: n must be <= 10");
  if (n <= 1) return 0;
  std::vector<std::uint32_t> block(n, 0);  // restricted-growth string
  std::vector<std::uint32_t> max_prefix(n, 0);
  std::uint64_t best = ~0ull;
  while (true) {
    std::uint64_t cost = 0;
    for (VertexId u = 0; u + 1 < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (s.is_plus(u, v) != (block[u] == block[v])) ++cost;
    best = std::min(best, cost);
    // next restricted-growth string: block[i] <= max(block[0..i-1]) + 1
    std::uint32_t i = n - 1;
    while (i > 0 && block[i] == max_prefix[i] + 1) --i;
    if (i == 0) break;
    ++block[i];
    for (std::uint32_t j = i + 1; j < n; ++j) {
      max_prefix[j] = std::max(max_prefix[j - 1], block[j - 1]);
      block[j] = 0;
    }
  }
  return best;
}

inline nlohmann::ordered_json to_json(const Clustering& c, std::uint64_t cost) {
  nlohmann::ordered_json j;
  j["pivots"] = c.pivots;
  nlohmann::ordered_json members = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < c.cluster_of.size(); ++v)
    members[std::to_string(v)] = c.cluster_of[v];
  j["cluster_of"] = std::move(members);
  j["cost"] = cost;
  return j;
}

}  // namespace gmis
