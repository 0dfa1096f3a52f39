#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

// Complete graph on n nodes with a +/- label per unordered pair, stored
// as one bit per pair in upper-triangular order. True means '+'.
class SignedCompleteGraph {
 public:
  SignedCompleteGraph() = default;
  explicit SignedCompleteGraph(std::uint32_t n)
      : n_(n), labels_(static_cast<std::size_t>(n) * (n - 1) / 2, false) {}

  std::uint32_t n() const { return n_; }
  std::uint64_t pair_count() const { return labels_.size(); }

  bool is_plus(VertexId u, VertexId v) const { return labels_[pair_index(u, v)]; }

  void set_label(VertexId u, VertexId v, bool plus) { labels_[pair_index(u, v)] = plus; }

  // The graph whose edges are exactly the '+' pairs.
  Graph plus_graph() const {
    std::vector<Edge> edges;
    for (VertexId u = 0; u + 1 < n_; ++u)
      for (VertexId v = u + 1; v < n_; ++v)
        if (is_plus(u, v)) edges.emplace_back(u, v);
    return Graph::from_sorted_canonical_edges(n_, edges);
  }

 private:
  std::size_t pair_index(VertexId u, VertexId v) const {
    if (u == v || u >= n_ || v >= n_)
      throw std::invalid_argument("signed graph: invalid pair (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * n_ - static_cast<std::size_t>(u) * (u + 1) / 2 +
           (v - u - 1);
  }

  std::uint32_t n_ = 0;
  std::vector<bool> labels_;
};

// Text format: first line "n", then one line per labeled pair "u v s"
// with s in {+,-}. Pairs not listed default to '-'.
inline SignedCompleteGraph read_signed_graph(std::istream& in) {
  std::uint64_t n = 0;
  if (!(in >> n)) throw std::invalid_argument("signed graph: missing node count");
  SignedCompleteGraph s(static_cast<std::uint32_t>(n));
  std::uint64_t u = 0;
  while (in >> u) {
    std::uint64_t v = 0;
    std::string sign;
    if (!(in >> v >> sign)) throw std::invalid_argument("signed graph: truncated pair line");
    if (u >= n || v >= n || u == v)
      throw std::invalid_argument("signed graph: invalid pair (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (sign != "+" && sign != "-")
      throw std::invalid_argument("signed graph: label must be + or -, got '" + sign + "'");
    s.set_label(static_cast<VertexId>(u), static_cast<VertexId>(v), sign == "+");
  }
  return s;
}

inline void write_signed_graph(const SignedCompleteGraph& s, std::ostream& out) {
  out << s.n() << '\n';
  for (VertexId u = 0; u + 1 < s.n(); ++u)
    for (VertexId v = u + 1; v < s.n(); ++v)
      if (s.is_plus(u, v)) out << u << ' ' << v << " +\n";
}

}  // namespace gmis
