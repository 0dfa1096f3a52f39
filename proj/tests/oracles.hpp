// Test-only oracles, kept independent of the library's trace and DAG
// machinery so they can check it.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/permutation.hpp"

namespace gmis::testing {

// Exhaustive dependency-length oracle: enumerate every subset of
// positions and check the dependency-path conditions directly —
// ascending positions forming a path whose odd-indexed (1-based)
// vertices are in the MIS, even-indexed ones are not and follow their
// inhibitor. MIS membership and inhibitors are recomputed with a plain
// pass. Only intended for n <= ~20.
inline std::uint32_t brute_force_dependency_length(const Graph& g, const Permutation& perm) {
  const std::uint32_t n = g.n();
  std::vector<char> banned(n, 0), mis(n, 0);
  for (std::uint32_t pos = 0; pos < n; ++pos) {
    const VertexId v = perm.vertex_at(pos);
    if (banned[v]) continue;
    mis[v] = 1;
    banned[v] = 1;
    for (VertexId u : g.neighbors(v)) banned[u] = 1;
  }
  auto inhibitor_of = [&](VertexId v) {
    VertexId best = kNoVertex;
    std::uint32_t best_pos = 0;
    for (VertexId u : g.neighbors(v)) {
      if (!mis[u]) continue;
      const std::uint32_t pu = perm.position_of(u);
      if (best == kNoVertex || pu < best_pos) {
        best = u;
        best_pos = pu;
      }
    }
    return best;
  };

  std::uint32_t best_len = 0;
  std::vector<std::uint32_t> positions;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    positions.clear();
    for (std::uint32_t p = 0; p < n; ++p)
      if (mask >> p & 1) positions.push_back(p);
    if (positions.size() % 2 == 0) continue;
    bool ok = true;
    for (std::size_t k = 0; ok && k < positions.size(); ++k) {
      const VertexId v = perm.vertex_at(positions[k]);
      if (k % 2 == 0) {
        ok = mis[v];
      } else {
        ok = !mis[v] && inhibitor_of(v) == perm.vertex_at(positions[k - 1]);
      }
      if (ok && k > 0) ok = g.has_edge(perm.vertex_at(positions[k - 1]), v);
    }
    if (ok) best_len = std::max<std::uint32_t>(best_len, positions.size());
  }
  return best_len;
}

}  // namespace gmis::testing
