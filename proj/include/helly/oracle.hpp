#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helly/gates.hpp"
#include "helly/graph.hpp"

namespace helly {

/**
 * Brute-force all-pairs summary: one BFS per vertex, O(nm) time, O(n)
 * extra space (no distance matrix is stored).  radius/center/median use
 * the cost-weighted objectives; diameter and unit_ecc are unit-cost.
 */
struct ApspSummary {
  std::vector<Value> ecc;          // cost-weighted eccentricity per vertex
  std::vector<Value> total_dist;   // cost-weighted total distance per vertex
  std::vector<std::int32_t> unit_ecc;
  Value radius = 0;                // min over ecc
  std::int64_t diameter = 0;       // max over unit_ecc
  std::vector<Vertex> center;      // all argmin of ecc, ascending
  std::vector<Vertex> median;      // all argmin of total_dist, ascending
  std::int64_t bfs_calls = 0;
};

/**
 * pre: g.vertex_count() <= max_n (the quadratic-work guard; override
 * deliberately for large verification runs).  threads >= 1 splits the BFS
 * sweep across worker threads; results are identical for any thread count.
 */
ApspSummary apsp_summary(const Graph& g, const CostFn& c, Vertex max_n = 5000, int threads = 1);

/** Full n x n distance matrix; guarded by max_n like apsp_summary. */
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(Vertex n, std::vector<std::int32_t> d) : n_(n), d_(std::move(d)) {}
  std::int32_t at(Vertex u, Vertex v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }
  Vertex size() const { return n_; }

 private:
  Vertex n_ = 0;
  std::vector<std::int32_t> d_;
};

DistanceMatrix distance_matrix(const Graph& g, Vertex max_n = 5000);

/** First violated gate-table clause, or ok = true when every entry checks out. */
struct GateCheck {
  bool ok = true;
  std::string violation;  // human-readable clause description
  Vertex vertex = -1;     // the w whose entry failed
};

/**
 * Re-verifies every clause of the GateTables contract against exact
 * distances: gate distance and adjacency coverage, dist(v, gate) == 2,
 * pseudo-gate distance and closed-neighborhood coverage, and pgate lying
 * in N[z] of some valid gate z.  Intended for fault injection: a corrupted
 * table yields ok = false with the clause named.
 */
GateCheck verify_gate_tables(const Graph& g, const GateTables& tables, const DistanceMatrix& dm);
GateCheck verify_gate_tables(const Graph& g, const GateTables& tables, Vertex max_n = 5000);

}  // namespace helly
