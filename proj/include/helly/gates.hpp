#pragma once

#include <cstdint>
#include <vector>

#include "helly/graph.hpp"
#include "helly/vertex_set.hpp"

namespace helly {

/**
 * Gate and pseudo-gate tables for one pivot v, written S = N(v) below.
 * For a vertex w with d = dist(v, w) >= 2:
 *
 *   gate[w]  is a vertex g with dist(w, g) <= d - 2 that is adjacent to
 *            every x in N(v) with dist(x, w) = d - 1, and dist(v, g) = 2
 *            (for d = 2 the gate is w itself);
 *   pgate[w] is a vertex pg with dist(w, pg) <= d - 1 whose closed
 *            neighborhood contains every x in N[v] with dist(x, w) <= d.
 *
 * Both entries are -1 for d < 2.  Such vertices exist for every pivot of a
 * Helly graph; construction throws algorithm_error("gate not found ...")
 * otherwise, which doubles as a fast non-Helly detector.
 */
struct GateTables {
  Vertex pivot = 0;
  DistanceRow dist;            // BFS row from the pivot
  std::vector<Vertex> gate;    // -1 where undefined
  std::vector<Vertex> pgate;   // -1 where undefined
  std::int64_t bfs_calls = 0;  // 1 + one per fallback
  std::int64_t tier2_fallbacks = 0;
};

/**
 * Weighted step statistics for every neighbor u of the pivot v over a
 * vertex set A: summing c(w) over w in A with dist(u, w) > dist(v, w)
 * gives q_plus, dist equal gives q_eq, and dist smaller gives q_minus.
 * Entries are aligned with g.neighbors(pivot).
 */
struct QValues {
  Vertex pivot = 0;
  std::vector<Value> q_plus, q_eq, q_minus;
};

/**
 * Builds gate tables with one BFS from the pivot plus bit-set bookkeeping
 * over N(v) indices.  Gate candidates are inherited from BFS parents; when
 * no inherited candidate is valid, a per-vertex BFS fallback runs and is
 * counted in tier2_fallbacks.
 */
GateTables build_gate_tables(const Graph& g, Vertex pivot);

/**
 * Evaluates QValues for all neighbors of tables.pivot in O(m) time from the
 * gate tables, without any BFS from the neighbors.
 */
QValues q_values(const Graph& g, const GateTables& tables, const VertexSet& a, const CostFn& c);

/**
 * Reference evaluation by one BFS per neighbor of v; works on arbitrary
 * connected graphs and is the correctness oracle for q_values.
 */
QValues q_values_baseline(const Graph& g, Vertex v, const VertexSet& a, const CostFn& c);

}  // namespace helly
