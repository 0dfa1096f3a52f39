#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/mis.hpp"
#include "gmis/permutation.hpp"

namespace gmis {

// Digraph of greedy-MIS dependencies for a fixed order. Two arc kinds:
//   MIS u -> non-MIS v   where u is v's inhibitor,
//   non-MIS v -> MIS w   where {v,w} is an edge and pos(v) < pos(w).
// Every arc strictly increases position, so the digraph is acyclic and
// ascending position order is a topological order. Directed paths that
// start and end at MIS vertices are exactly the dependency paths.
struct DependencyDag {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> arc_offsets;
  std::vector<VertexId> arc_targets;
  std::vector<std::uint8_t> in_mis;
  std::vector<std::uint32_t> position_of;

  std::span<const VertexId> arcs_from(VertexId v) const {
    return {arc_targets.data() + arc_offsets[v], arc_targets.data() + arc_offsets[v + 1]};
  }

  std::uint64_t arc_count() const { return arc_targets.size(); }

  bool validate() const {
    for (VertexId v = 0; v < n; ++v)
      for (VertexId w : arcs_from(v)) {
        if (position_of[v] >= position_of[w]) return false;
        if (in_mis[v] == in_mis[w]) return false;  // arcs alternate parity
      }
    return true;
  }
};

// Materializes the dependency structure of run on (g, perm). The run
// must be a fixed-order execution over the same inputs: its membership
// must equal the lexicographically first MIS and its inhibitors the
// minimum-position MIS neighbors.
inline DependencyDag build_dependency_dag(const Graph& g, const Permutation& perm,
                                          const MisRun& run) {
  detail::require_matching_sizes(g, perm);
  if (run.n != g.n()) throw std::invalid_argument("run does not match the graph size");
  const MisRun reference = sequential_greedy(g, perm);
  for (VertexId v = 0; v < g.n(); ++v) {
    if (run.in_mis[v] != reference.in_mis[v])
      throw std::invalid_argument("run membership is not the greedy MIS of (g, perm)");
    if (run.inhibitor[v] != reference.inhibitor[v])
      throw std::invalid_argument("run inhibitors do not match (g, perm)");
  }

  const std::uint32_t n = g.n();
  DependencyDag dag;
  dag.n = n;
  dag.in_mis = run.in_mis;
  dag.position_of = perm.inverse;
  dag.arc_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  auto count_arc = [&](VertexId from) { ++dag.arc_offsets[from + 1]; };
  for (VertexId v = 0; v < n; ++v) {
    if (run.in_mis[v]) continue;
    count_arc(run.inhibitor[v]);
    for (VertexId w : g.neighbors(v))
      if (run.in_mis[w] && perm.position_of(v) < perm.position_of(w)) count_arc(v);
  }
  for (VertexId v = 0; v < n; ++v) dag.arc_offsets[v + 1] += dag.arc_offsets[v];
  dag.arc_targets.resize(dag.arc_offsets[n]);
  std::vector<std::uint64_t> cursor(dag.arc_offsets.begin(), dag.arc_offsets.end() - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (run.in_mis[v]) continue;
    dag.arc_targets[cursor[run.inhibitor[v]]++] = v;
    for (VertexId w : g.neighbors(v))
      if (run.in_mis[w] && perm.position_of(v) < perm.position_of(w))
        dag.arc_targets[cursor[v]++] = w;
  }
  return dag;
}

// Longest dependency path, counted in vertices (the 2l+1 convention):
// the maximum over directed paths that start and end at MIS vertices.
// Longest-path DP in ascending position order; 0 only for the empty
// graph, otherwise odd and >= 1.
inline std::uint32_t dependency_length(const DependencyDag& dag) {
  if (dag.n == 0) return 0;
  std::vector<VertexId> by_position(dag.n);
  for (VertexId v = 0; v < dag.n; ++v) by_position[dag.position_of[v]] = v;
  std::vector<std::uint32_t> best(dag.n, 0);
  std::uint32_t result = 0;
  for (VertexId v : by_position) {
    if (dag.in_mis[v]) {
      best[v] = std::max(best[v], 1u);
      result = std::max(result, best[v]);
    }
    assert(best[v] > 0);
    for (VertexId w : dag.arcs_from(v)) best[w] = std::max(best[w], best[v] + 1);
  }
  assert(result % 2 == 1);
  return result;
}

// Longest path of g along which positions strictly increase, counted in
// vertices. Each edge is oriented low -> high position; DP over the
// resulting DAG in position order. 1 for a nonempty edgeless graph.
inline std::uint32_t longest_increasing_path(const Graph& g, const Permutation& perm) {
  detail::require_matching_sizes(g, perm);
  if (g.n() == 0) return 0;
  std::vector<std::uint32_t> best(g.n(), 1);
  std::uint32_t result = 0;
  for (std::uint32_t pos = 0; pos < g.n(); ++pos) {
    const VertexId v = perm.vertex_at(pos);
    std::uint32_t in_best = 0;
    for (VertexId u : g.neighbors(v))
      if (perm.position_of(u) < pos) in_best = std::max(in_best, best[u]);
    best[v] = in_best + 1;
    result = std::max(result, best[v]);
  }
  return result;
}

// Maximum alive-neighbor count among alive vertices after sequentially
// processing the first floor(beta*n) positions. All prefix vertices are
// dead after the prefix, so the survivors are exactly the alive suffix.
inline std::uint32_t max_suffix_degree(const Graph& g, const Permutation& perm, double beta) {
  detail::require_matching_sizes(g, perm);
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("max_suffix_degree: beta must lie in (0,1)");
  const std::uint32_t n = g.n();
  const auto prefix = static_cast<std::uint32_t>(beta * n);
  std::vector<std::uint8_t> alive(n, 1);
  for (std::uint32_t pos = 0; pos < prefix; ++pos) {
    const VertexId v = perm.vertex_at(pos);
    if (!alive[v]) continue;
    alive[v] = 0;
    for (VertexId u : g.neighbors(v)) alive[u] = 0;
  }
  std::uint32_t max_deg = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    assert(perm.position_of(v) >= prefix);
    std::uint32_t d = 0;
    for (VertexId u : g.neighbors(v)) d += alive[u];
    max_deg = std::max(max_deg, d);
  }
  return max_deg;
}

// Exact round bound: parallel rounds <= (dependency length + 1)/2.
inline bool check_round_bound(const MisRun& run, std::uint32_t dependency_len) {
  if (dependency_len % 2 == 0)
    throw std::invalid_argument("dependency length must be odd, got " +
                                std::to_string(dependency_len));
  return run.num_rounds <= (dependency_len + 1) / 2;
}

// DOT rendering for inspection; MIS vertices are drawn as double circles
// and labeled with their positions.
inline void write_dot(const DependencyDag& dag, std::ostream& out) {
  out << "digraph dependency {\n  rankdir=LR;\n";
  for (VertexId v = 0; v < dag.n; ++v) {
    out << "  v" << v << " [label=\"" << v << " @" << dag.position_of[v] << "\""
        << (dag.in_mis[v] ? ", shape=doublecircle" : ", shape=circle") << "];\n";
  }
  for (VertexId v = 0; v < dag.n; ++v)
    for (VertexId w : dag.arcs_from(v)) out << "  v" << v << " -> v" << w << ";\n";
  out << "}\n";
}

}  // namespace gmis
