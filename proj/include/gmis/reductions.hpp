#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

// Line graph L of g: one vertex per edge of g, with {e, e'} adjacent in
// L iff the edges share an endpoint. Edge-vertices are numbered by the
// canonical edge id of g (lexicographic (u,v), u < v).
struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of_vertex;  // line-graph vertex -> host edge

  // host edge (in either orientation) -> line-graph vertex
  std::uint32_t vertex_of_edge(const Graph& host, VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    auto nb = host.neighbors(u);
    std::uint64_t rank = upper_offsets[u];
    for (VertexId w : nb) {
      if (w <= u) continue;
      if (w == v) return static_cast<std::uint32_t>(rank);
      ++rank;
    }
    throw std::invalid_argument("vertex_of_edge: not an edge of the host graph");
  }

  std::vector<std::uint64_t> upper_offsets;  // prefix counts of canonical edges per vertex
};

inline LineGraph line_graph(const Graph& g) {
  LineGraph lg;
  lg.edge_of_vertex = g.edges();
  lg.upper_offsets.assign(static_cast<std::size_t>(g.n()) + 1, 0);
  for (std::uint32_t e = 0; e < lg.edge_of_vertex.size(); ++e)
    ++lg.upper_offsets[lg.edge_of_vertex[e].first + 1];
  for (VertexId v = 0; v < g.n(); ++v) lg.upper_offsets[v + 1] += lg.upper_offsets[v];

  // Incident edge ids per host vertex; every pair sharing vertex v forms
  // a line-graph edge, and each sharing pair is generated exactly once
  // (two simple edges share at most one endpoint).
  std::vector<std::vector<std::uint32_t>> incident(g.n());
  for (VertexId v = 0; v < g.n(); ++v) incident[v].reserve(g.degree(v));
  for (std::uint32_t e = 0; e < lg.edge_of_vertex.size(); ++e) {
    incident[lg.edge_of_vertex[e].first].push_back(e);
    incident[lg.edge_of_vertex[e].second].push_back(e);
  }
  std::vector<Edge> arcs;
  for (VertexId v = 0; v < g.n(); ++v) {
    const auto& ids = incident[v];
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        arcs.emplace_back(std::min(ids[i], ids[j]), std::max(ids[i], ids[j]));
  }
  lg.graph = Graph::from_edges(static_cast<std::uint32_t>(lg.edge_of_vertex.size()),
                               std::move(arcs));
  return lg;
}

// Luby's coloring reduction: delta+1 disjoint copies of g (edges within
// the same copy keep the copy's color), plus a clique over the delta+1
// copies of each vertex. Pair (v, c) maps to vertex v*(delta+1)+c.
struct ColoringReduction {
  Graph graph;
  std::uint32_t colors = 0;  // delta + 1

  std::uint32_t vertex_of_pair(VertexId v, std::uint32_t color) const {
    return v * colors + color;
  }
  VertexId host_vertex(std::uint32_t reduced) const { return reduced / colors; }
  std::uint32_t color_of(std::uint32_t reduced) const { return reduced % colors; }
};

inline ColoringReduction coloring_reduction_graph(const Graph& g, std::uint32_t delta) {
  if (delta < g.max_degree())
    throw std::invalid_argument("coloring reduction: delta below the actual max degree");
  ColoringReduction red;
  red.colors = delta + 1;
  const std::uint64_t n_out = static_cast<std::uint64_t>(g.n()) * red.colors;
  std::vector<Edge> edges;
  edges.reserve(g.m() * red.colors +
                static_cast<std::uint64_t>(g.n()) * red.colors * (red.colors - 1) / 2);
  for (VertexId u = 0; u < g.n(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v)
        for (std::uint32_t c = 0; c < red.colors; ++c)
          edges.emplace_back(red.vertex_of_pair(u, c), red.vertex_of_pair(v, c));
  for (VertexId v = 0; v < g.n(); ++v)
    for (std::uint32_t c = 0; c < red.colors; ++c)
      for (std::uint32_t c2 = c + 1; c2 < red.colors; ++c2)
        edges.emplace_back(red.vertex_of_pair(v, c), red.vertex_of_pair(v, c2));
  red.graph = Graph::from_edges(static_cast<std::uint32_t>(n_out), std::move(edges));
  return red;
}

}  // namespace gmis
