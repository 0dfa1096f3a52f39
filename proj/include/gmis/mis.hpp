#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "gmis/graph.hpp"
#include "gmis/permutation.hpp"
#include "gmis/rng.hpp"

namespace gmis {

// Full trace of one MIS execution.
//
// round_removed is round-indexed for the parallel variants and
// step-indexed (the 1-based step of the sequential pass) for
// sequential_greedy; both start at 1. round_joined is populated only by
// the round-based variants. inhibitor[v] is the minimum-position MIS
// neighbor of a non-MIS vertex v (for luby, which has no global order,
// it is the minimum-rank joiner adjacent to v in v's removal round);
// MIS vertices carry kNoVertex.
struct MisRun {
  std::uint32_t n = 0;
  std::vector<std::uint8_t> in_mis;
  std::vector<VertexId> inhibitor;
  std::vector<std::uint32_t> round_joined;
  std::vector<std::uint32_t> round_removed;
  std::uint32_t num_rounds = 0;

  explicit MisRun(std::uint32_t n_vertices = 0)
      : n(n_vertices),
        in_mis(n_vertices, 0),
        inhibitor(n_vertices, kNoVertex),
        round_joined(n_vertices, 0),
        round_removed(n_vertices, 0) {}

  std::vector<VertexId> mis_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v)
      if (in_mis[v]) out.push_back(v);
    return out;
  }

  std::uint64_t mis_size() const {
    std::uint64_t s = 0;
    for (VertexId v = 0; v < n; ++v) s += in_mis[v];
    return s;
  }
};

namespace detail {

inline void require_matching_sizes(const Graph& g, const Permutation& perm) {
  if (g.n() != perm.size())
    throw std::invalid_argument("graph has " + std::to_string(g.n()) +
                                " vertices but permutation covers " +
                                std::to_string(perm.size()));
}

}  // namespace detail

// Sequential greedy pass over positions 0..n-1: an alive vertex joins
// the MIS and kills itself and its alive neighbors. Produces the
// lexicographically first MIS for the order. round_removed holds
// 1-based step numbers; num_rounds is 1 by convention (0 when n = 0).
inline MisRun sequential_greedy(const Graph& g, const Permutation& perm) {
  detail::require_matching_sizes(g, perm);
  const std::uint32_t n = g.n();
  MisRun run(n);
  std::vector<std::uint8_t> alive(n, 1);
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const VertexId v = perm.vertex_at(pos);
    if (!alive[v]) continue;
    const std::uint32_t step = pos + 1;
    run.in_mis[v] = 1;
    run.round_removed[v] = step;
    alive[v] = 0;
    for (VertexId u : g.neighbors(v)) {
      if (!alive[u]) continue;
      alive[u] = 0;
      run.round_removed[u] = step;
      run.inhibitor[u] = v;  // first killer = minimum-position MIS neighbor
    }
  }
  run.num_rounds = n > 0 ? 1 : 0;
  return run;
}

namespace detail {

// Local minima of the surviving set: alive vertices whose position is
// smaller than every alive neighbor's. Positions are distinct, so ties
// cannot occur.
inline void collect_local_minima(const Graph& g, const Permutation& perm,
                                 const std::vector<std::uint8_t>& alive,
                                 const std::vector<VertexId>& frontier,
                                 std::vector<VertexId>& joiners) {
  joiners.clear();
  for (VertexId v : frontier) {
    const std::uint32_t pos_v = perm.position_of(v);
    bool is_min = true;
    for (VertexId u : g.neighbors(v)) {
      if (!alive[u]) continue;
      assert(perm.position_of(u) != pos_v);
      if (perm.position_of(u) < pos_v) {
        is_min = false;
        break;
      }
    }
    if (is_min) joiners.push_back(v);
  }
}

// inhibitor[v] := minimum-position MIS neighbor for every non-MIS v.
inline void fill_inhibitors(const Graph& g, const Permutation& perm, MisRun& run) {
  for (VertexId v = 0; v < g.n(); ++v) {
    if (run.in_mis[v]) continue;
    VertexId best = kNoVertex;
    std::uint32_t best_pos = 0;
    for (VertexId u : g.neighbors(v)) {
      if (!run.in_mis[u]) continue;
      const std::uint32_t pos = perm.position_of(u);
      if (best == kNoVertex || pos < best_pos) {
        best = u;
        best_pos = pos;
      }
    }
    run.inhibitor[v] = best;
  }
}

}  // namespace detail

// Round-synchronous parallel greedy: every round, all local minima of
// the surviving graph join the MIS and are removed together with their
// neighbors. round_removed records the first round in which any joining
// neighbor kills the vertex.
inline MisRun parallel_greedy(const Graph& g, const Permutation& perm) {
  detail::require_matching_sizes(g, perm);
  const std::uint32_t n = g.n();
  MisRun run(n);
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<VertexId> frontier(n), next, joiners;
  for (VertexId v = 0; v < n; ++v) frontier[v] = v;
  std::uint32_t round = 0;
  while (!frontier.empty()) {
    ++round;
    detail::collect_local_minima(g, perm, alive, frontier, joiners);
    for (VertexId v : joiners) {
      run.in_mis[v] = 1;
      run.round_joined[v] = round;
      run.round_removed[v] = round;
      alive[v] = 0;
    }
    for (VertexId v : joiners)
      for (VertexId u : g.neighbors(v)) {
        if (!alive[u]) continue;
        alive[u] = 0;
        run.round_removed[u] = round;
      }
    next.clear();
    for (VertexId v : frontier)
      if (alive[v]) next.push_back(v);
    frontier.swap(next);
  }
  run.num_rounds = round;
  detail::fill_inhibitors(g, perm, run);
  return run;
}

// Slowed-down parallel variant: a non-MIS vertex stays in the graph
// until the round in which its inhibitor joins. Yields the same MIS as
// the other two variants and never fewer rounds than parallel_greedy.
// round_removed is therefore inhibitor-indexed, not first-kill-indexed.
inline MisRun slowed_parallel_greedy(const Graph& g, const Permutation& perm) {
  detail::require_matching_sizes(g, perm);
  const std::uint32_t n = g.n();
  const MisRun seq = sequential_greedy(g, perm);
  MisRun run(n);
  run.inhibitor = seq.inhibitor;
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<VertexId> frontier(n), next, joiners;
  for (VertexId v = 0; v < n; ++v) frontier[v] = v;
  std::uint32_t round = 0;
  while (!frontier.empty()) {
    ++round;
    detail::collect_local_minima(g, perm, alive, frontier, joiners);
    for (VertexId v : joiners) {
      // A surviving local minimum is necessarily in the greedy MIS: a
      // surviving non-MIS vertex still has its (smaller-position)
      // inhibitor alive next to it.
      assert(seq.in_mis[v]);
      run.in_mis[v] = 1;
      run.round_joined[v] = round;
      run.round_removed[v] = round;
      alive[v] = 0;
    }
    for (VertexId v : joiners)
      for (VertexId u : g.neighbors(v)) {
        if (!alive[u] || run.inhibitor[u] != v) continue;
        alive[u] = 0;
        run.round_removed[u] = round;
      }
    next.clear();
    for (VertexId v : frontier)
      if (alive[v]) next.push_back(v);
    frontier.swap(next);
  }
  run.num_rounds = round;
  return run;
}

// Luby's algorithm: identical per-round rule but with a freshly drawn
// uniform order over the survivors in every round.
inline MisRun luby(const Graph& g, RngStream& rng) {
  const std::uint32_t n = g.n();
  MisRun run(n);
  std::vector<VertexId> survivors(n);
  for (VertexId v = 0; v < n; ++v) survivors[v] = v;
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<std::uint32_t> rank(n, 0);
  std::vector<VertexId> joiners, next;
  std::uint32_t round = 0;
  while (!survivors.empty()) {
    ++round;
    // fresh permutation of the survivors (Fisher-Yates), rank = position
    for (std::uint32_t i = static_cast<std::uint32_t>(survivors.size()); i > 1; --i) {
      const auto j = static_cast<std::uint32_t>(rng.next_below(i));
      std::swap(survivors[i - 1], survivors[j]);
    }
    for (std::uint32_t i = 0; i < survivors.size(); ++i) rank[survivors[i]] = i;
    joiners.clear();
    for (VertexId v : survivors) {
      bool is_min = true;
      for (VertexId u : g.neighbors(v)) {
        if (alive[u] && rank[u] < rank[v]) {
          is_min = false;
          break;
        }
      }
      if (is_min) joiners.push_back(v);
    }
    for (VertexId v : joiners) {
      run.in_mis[v] = 1;
      run.round_joined[v] = round;
      run.round_removed[v] = round;
      alive[v] = 0;
    }
    // joiners are in ascending rank order (survivors[i] has rank i), so
    // the recorded killer is the minimum-rank joiner adjacent to u
    for (VertexId v : joiners)
      for (VertexId u : g.neighbors(v)) {
        if (!alive[u]) continue;
        alive[u] = 0;
        run.round_removed[u] = round;
        run.inhibitor[u] = v;
      }
    next.clear();
    for (VertexId v : survivors)
      if (alive[v]) next.push_back(v);
    survivors.swap(next);
  }
  run.num_rounds = round;
  return run;
}

// True iff members is an independent set of g and no vertex outside it
// is free of members among its neighbors.
inline bool verify_mis(const Graph& g, const std::vector<std::uint8_t>& members) {
  if (members.size() != g.n()) return false;
  for (VertexId v = 0; v < g.n(); ++v) {
    bool covered = members[v] != 0;
    for (VertexId u : g.neighbors(v)) {
      if (members[v] && members[u]) return false;  // not independent
      covered = covered || members[u];
    }
    if (!covered) return false;  // not maximal
  }
  return true;
}

inline nlohmann::ordered_json to_json(const MisRun& run) {
  nlohmann::ordered_json j;
  j["n"] = run.n;
  j["mis"] = run.mis_vertices();
  nlohmann::ordered_json inhib = nlohmann::ordered_json::object();
  nlohmann::ordered_json joined = nlohmann::ordered_json::object();
  nlohmann::ordered_json removed = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < run.n; ++v) {
    if (run.inhibitor[v] != kNoVertex) inhib[std::to_string(v)] = run.inhibitor[v];
    if (run.round_joined[v] != 0) joined[std::to_string(v)] = run.round_joined[v];
    if (run.round_removed[v] != 0) removed[std::to_string(v)] = run.round_removed[v];
  }
  j["inhibitor"] = std::move(inhib);
  j["round_joined"] = std::move(joined);
  j["round_removed"] = std::move(removed);
  j["num_rounds"] = run.num_rounds;
  return j;
}

}  // namespace gmis
