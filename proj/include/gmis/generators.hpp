#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/rng.hpp"

namespace gmis {

// Erdos-Renyi G(n, p): each of the C(n,2) vertex pairs is an edge
// independently with probability p. Pairs are visited in lexicographic
// order with geometric gap skipping, so the cost is O(n + m) rather
// than O(n^2). Deterministic for a given stream.
inline Graph gen_gnp(std::uint32_t n, double p, RngStream& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must be in [0,1]");
  std::vector<Edge> edges;
  if (n >= 2 && p > 0.0) {
    if (p == 1.0) {
      edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
      for (VertexId u = 0; u + 1 < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
      const double log_q = std::log1p(-p);
      VertexId u = 0, v = 0;  // v trails the last visited pair's column
      while (u + 1 < n) {
        const double r = rng.next_double();
        const double skip_f = std::floor(std::log1p(-r) / log_q);
        if (skip_f >= 9.0e18) break;  // beyond any possible pair count
        std::uint64_t step = static_cast<std::uint64_t>(skip_f) + 1;
        // advance (u, v) by `step` positions in lexicographic pair order
        while (u + 1 < n) {
          const std::uint64_t row_left = n - 1 - v;  // pairs (u, v+1..n-1)
          if (step <= row_left) {
            v += static_cast<VertexId>(step);
            edges.emplace_back(u, v);
            break;
          }
          step -= row_left;
          ++u;
          v = u;
        }
      }
    }
  }
  return Graph::from_sorted_canonical_edges(n, edges);
}

// Shape of the layered-clique lower-bound family: c components, each
// with layers U_0..U_l of sizes 2^i (layer i a clique, consecutive
// layers completely bipartite), remaining vertices isolated.
struct LowerBoundParams {
  std::uint32_t l = 0;               // highest layer index, floor(log2(n)/5)
  std::uint32_t components = 0;      // c
  std::uint32_t component_size = 0;  // 2^(l+1) - 1
  std::uint32_t round_threshold() const { return (l + 2) / 2; }  // ceil((l+1)/2)
};

inline LowerBoundParams lower_bound_params(std::uint32_t n) {
  if (n < 32) throw std::invalid_argument("lower-bound construction needs n >= 32");
  LowerBoundParams params;
  params.l = static_cast<std::uint32_t>(std::floor(std::log2(static_cast<double>(n)) / 5.0));
  params.component_size = (1u << (params.l + 1)) - 1;
  const auto sqrt_n = static_cast<std::uint32_t>(std::floor(std::sqrt(static_cast<double>(n))));
  params.components = std::min(sqrt_n, n / params.component_size);
  return params;
}

// Appendix-style layered construction on exactly n vertices. Component
// vertices occupy the low indices (component k spans
// [k*size, (k+1)*size), layers in increasing order inside a component);
// leftover vertices take the highest indices and stay isolated.
inline Graph gen_lower_bound_graph(std::uint32_t n) {
  const LowerBoundParams params = lower_bound_params(n);
  std::vector<Edge> edges;
  const std::uint64_t per_component_clique = [&] {
    std::uint64_t e = 0;
    for (std::uint32_t i = 0; i <= params.l; ++i) {
      const std::uint64_t s = 1u << i;
      e += s * (s - 1) / 2;
    }
    return e;
  }();
  const std::uint64_t per_component_bipartite = [&] {
    std::uint64_t e = 0;
    for (std::uint32_t i = 0; i < params.l; ++i) e += (1ull << i) * (1ull << (i + 1));
    return e;
  }();
  edges.reserve(params.components * (per_component_clique + per_component_bipartite));
  for (std::uint32_t k = 0; k < params.components; ++k) {
    const VertexId base = k * params.component_size;
    VertexId layer_start = base;
    for (std::uint32_t i = 0; i <= params.l; ++i) {
      const std::uint32_t size = 1u << i;
      for (std::uint32_t a = 0; a < size; ++a)
        for (std::uint32_t b = a + 1; b < size; ++b)
          edges.emplace_back(layer_start + a, layer_start + b);
      if (i < params.l) {
        const VertexId next_start = layer_start + size;
        for (std::uint32_t a = 0; a < size; ++a)
          for (std::uint32_t b = 0; b < 2 * size; ++b)
            edges.emplace_back(layer_start + a, next_start + b);
      }
      layer_start += size;
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace gmis
