#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gmis {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Thrown when a computed result breaks one of the library's structural
// guarantees (as opposed to bad input, which is std::invalid_argument).
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable simple undirected graph in compressed adjacency (CSR) form.
// Neighbor lists are sorted ascending; the flat array stores both
// directions of every edge, so its length is 2m.
class Graph {
 public:
  Graph() = default;

  std::uint32_t n() const { return n_; }
  std::uint64_t m() const { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::uint32_t max_degree() const {
    std::uint32_t d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  // Edges as canonical (u, v) pairs with u < v, lexicographically sorted.
  // The index of a pair in this list is its canonical edge id.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Builds from an arbitrary edge list. Duplicate pairs (in either
  // orientation) collapse to one edge; self-loops and out-of-range
  // endpoints are rejected.
  static Graph from_edges(std::uint32_t n, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") with n=" + std::to_string(n));
      if (u == v)
        throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return from_sorted_canonical_edges(n, edges);
  }

  // Fast path for generators that already produce sorted unique pairs
  // with u < v.
  static Graph from_sorted_canonical_edges(std::uint32_t n, const std::vector<Edge>& edges) {
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (std::uint32_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adj_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.adj_[cursor[u]++] = v;
      g.adj_[cursor[v]++] = u;
    }
    // Lexicographic input order fills every list ascending: for vertex v,
    // all down-neighbors u < v arrive (in increasing u) before any
    // up-neighbor w > v does.
#ifndef NDEBUG
    for (VertexId v = 0; v < n; ++v) {
      auto nb = g.neighbors(v);
      assert(std::is_sorted(nb.begin(), nb.end()));
    }
#endif
    return g;
  }

  // Walks all adjacency lists and checks sortedness, symmetry, absence
  // of self-loops/duplicates, and the offset/array-length accounting.
  bool validate() const {
    if (offsets_.size() != static_cast<std::size_t>(n_) + 1) return false;
    if (offsets_[0] != 0 || offsets_[n_] != adj_.size()) return false;
    if (adj_.size() != 2 * m_) return false;
    for (VertexId v = 0; v < n_; ++v) {
      auto nb = neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (nb[i] >= n_ || nb[i] == v) return false;
        if (i > 0 && nb[i - 1] >= nb[i]) return false;
        if (!has_edge(nb[i], v)) return false;
      }
    }
    return true;
  }

 private:
  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> adj_;
};

inline Graph build_graph(std::uint32_t n, std::vector<Edge> edges) {
  return Graph::from_edges(n, std::move(edges));
}

// Edge-list text format: first line "n m", then m lines "u v"
// (0-based). Output is canonical (u < v, lexicographic); input accepts
// either endpoint order and duplicates.
inline Graph read_edge_list(std::istream& in) {
  std::uint64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  if (n > std::numeric_limits<VertexId>::max())
    throw std::invalid_argument("edge list: n too large");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
    if (u >= n || v >= n)
      throw std::invalid_argument("edge list: endpoint out of range on line " +
                                  std::to_string(i + 2));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Graph::from_edges(static_cast<std::uint32_t>(n), std::move(edges));
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n() << ' ' << g.m() << '\n';
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

}  // namespace gmis
