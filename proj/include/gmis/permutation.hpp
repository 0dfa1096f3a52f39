#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gmis/graph.hpp"
#include "gmis/rng.hpp"

namespace gmis {

// A bijection between positions and vertices, 0-based on both sides.
// order[p] is the vertex at position p; inverse[v] is the position of
// vertex v. Position 0 is processed first.
struct Permutation {
  std::vector<VertexId> order;
  std::vector<std::uint32_t> inverse;

  std::uint32_t size() const { return static_cast<std::uint32_t>(order.size()); }
  VertexId vertex_at(std::uint32_t pos) const { return order[pos]; }
  std::uint32_t position_of(VertexId v) const { return inverse[v]; }

  static Permutation identity(std::uint32_t n) {
    Permutation p;
    p.order.resize(n);
    p.inverse.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) p.order[i] = p.inverse[i] = i;
    return p;
  }

  static Permutation from_order(std::vector<VertexId> order) {
    Permutation p;
    p.inverse.assign(order.size(), kNoVertex);
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
      VertexId v = order[pos];
      if (v >= order.size() || p.inverse[v] != kNoVertex)
        throw std::invalid_argument("order is not a bijection on [n)");
      p.inverse[v] = pos;
    }
    p.order = std::move(order);
    return p;
  }

  bool validate() const {
    if (order.size() != inverse.size()) return false;
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
      VertexId v = order[pos];
      if (v >= order.size() || inverse[v] != pos) return false;
    }
    return true;
  }
};

// Uniformly random permutation via the inside-out Fisher-Yates shuffle:
// for i in [0, n), j <- uniform{0..i}; order[i] <- order[j]; order[j] <- i.
inline Permutation random_permutation(std::uint32_t n, RngStream& rng) {
  Permutation p;
  p.order.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    auto j = static_cast<std::uint32_t>(rng.next_below(i + 1));
    p.order[i] = p.order[j];
    p.order[j] = i;
  }
  p.inverse.resize(n);
  for (std::uint32_t pos = 0; pos < n; ++pos) p.inverse[p.order[pos]] = pos;
  return p;
}

}  // namespace gmis
