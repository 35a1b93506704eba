#pragma once

// Hand-built fixtures and reference computations the unit tests use to
// cross-check library results.  Everything here is deliberately naive and
// independent of the algorithms under test.

#include <algorithm>
#include <utility>
#include <vector>

#include "helly/graph.hpp"
#include "helly/rng.hpp"

namespace helly::testing {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph make_path(Vertex n) {
  EdgeList e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

inline Graph make_cycle(Vertex n) {
  EdgeList e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

// Hub is vertex 0, leaves 1..n-1.
inline Graph make_star(Vertex leaves) {
  EdgeList e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, e);
}

inline Graph make_complete(Vertex n) {
  EdgeList e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

// King-move grid built directly from coordinates (no generator involved).
inline Graph make_king(Vertex rows, Vertex cols) {
  auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
  EdgeList e;
  for (Vertex r = 0; r < rows; ++r)
    for (Vertex c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c + 1 < cols) e.emplace_back(id(r, c), id(r + 1, c + 1));
      if (r + 1 < rows && c > 0) e.emplace_back(id(r, c), id(r + 1, c - 1));
    }
  return Graph::from_edge_list(rows * cols, e);
}

// Random connected graph: a random spanning tree plus extra random edges.
inline Graph make_random_connected(Vertex n, std::int64_t extra_edges, std::uint64_t seed) {
  Rng rng(seed);
  EdgeList e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(rng.vertex(v), v);
  for (std::int64_t i = 0; i < extra_edges; ++i) {
    Vertex a = rng.vertex(n), b = rng.vertex(n);
    if (a != b) e.emplace_back(a, b);
  }
  return Graph::from_edge_list(n, e);
}

// Reference all-pairs distances, O(n^3).
inline std::vector<std::vector<std::int32_t>> floyd_warshall(const Graph& g) {
  const Vertex n = g.vertex_count();
  const std::int32_t inf = 1 << 28;
  std::vector<std::vector<std::int32_t>> d(static_cast<std::size_t>(n),
                                           std::vector<std::int32_t>(static_cast<std::size_t>(n), inf));
  for (Vertex v = 0; v < n; ++v) {
    d[v][v] = 0;
    for (Vertex w : g.neighbors(v)) d[v][w] = 1;
  }
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

}  // namespace helly::testing
