#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "helly/types.hpp"
#include "helly/vertex_set.hpp"

namespace helly {

/** BFS distances from one source; dist is vertex-indexed, in [0, n). */
struct DistanceRow {
  Vertex source = 0;
  std::vector<std::int32_t> dist;
};

/**
 * Immutable undirected graph in CSR form.  Construction validates the
 * input: vertex count >= 1, endpoints in range, no self-loops, and the
 * graph must be connected.  Parallel edges are collapsed to one.
 * Neighbor lists are sorted ascending, which fixes the iteration order
 * every deterministic tie-break in this library relies on.
 */
class Graph {
 public:
  static Graph from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edge_list(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges));
  }

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
            adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }

  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[static_cast<std::size_t>(v) + 1] - offsets_[static_cast<std::size_t>(v)]);
  }

  bool has_edge(Vertex u, Vertex v) const;

 private:
  Graph() = default;

  Vertex n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_;  // n + 1 entries
  std::vector<Vertex> adj_;            // 2m entries, sorted per vertex
};

/** Non-negative 64-bit vertex costs; size must match the graph it is used with. */
class CostFn {
 public:
  CostFn() = default;
  explicit CostFn(std::vector<Cost> costs) : costs_(std::move(costs)) {}

  static CostFn unit(Vertex n) { return CostFn(std::vector<Cost>(static_cast<std::size_t>(n), 1)); }

  Vertex size() const { return static_cast<Vertex>(costs_.size()); }
  Cost operator[](Vertex v) const { return costs_[static_cast<std::size_t>(v)]; }
  const std::vector<Cost>& values() const { return costs_; }

  bool all_zero() const {
    for (Cost c : costs_)
      if (c != 0) return false;
    return true;
  }

 private:
  std::vector<Cost> costs_;
};

/** Single-source BFS.  pre: source in [0, n). */
DistanceRow bfs(const Graph& g, Vertex source);

/**
 * BFS into caller-owned scratch; dist must have n entries and queue n slots.
 * Overwrites both.  This is the allocation-free kernel the all-pairs and
 * search loops use.
 */
void bfs_fill(const Graph& g, Vertex source, std::span<std::int32_t> dist, std::span<Vertex> queue);

/** Closed ball N^r[v] as a vertex set.  pre: r >= 0. */
VertexSet ball(const Graph& g, Vertex v, std::int64_t r);

/** Cost-weighted eccentricity max_u c(u) * dist(u, v) of one vertex. */
Value eccentricity(const Graph& g, const CostFn& c, Vertex v);

/** Cost-weighted total distance sum_u c(u) * dist(u, v) of one vertex. */
Value total_distance(const Graph& g, const CostFn& c, Vertex v);

/** Same objectives evaluated on an existing BFS row (no extra BFS). */
Value eccentricity_of_row(const CostFn& c, std::span<const std::int32_t> dist);
Value total_distance_of_row(const CostFn& c, std::span<const std::int32_t> dist);

/** Throws validation_error unless c.size() == g.vertex_count(). */
void require_matching_costs(const Graph& g, const CostFn& c);

}  // namespace helly
