#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "helly/graph.hpp"

namespace helly {

/**
 * A (k+1)-subset on which the k-wise ball Helly property fails, together
 * with the per-center radii of the minimal ball family used: every ball
 * N^{radii[z]}[z] contains at least k vertices of the subset, yet the balls
 * have no common vertex (within slack alpha).
 */
struct HellyWitness {
  std::vector<Vertex> subset;        // k + 1 vertices, ascending
  std::vector<std::int32_t> radii;   // one radius per vertex z of the graph
};

struct HellyReport {
  int k = 2;
  int alpha = 0;
  bool holds = true;
  std::optional<HellyWitness> witness;
};

struct RecognitionBudget {
  // Work estimate n^{k+1} * n^2 must stay below this (about n <= 60 for
  // k = 2, n <= 30 for k = 3).
  double max_work = 7.8e8;
};

/**
 * Exact k-Helly test by reduction to minimal ball families: for every
 * (k+1)-subset S and every vertex z, take the k-th smallest distance from
 * z to S as the radius of z's ball; the property holds iff each such
 * family has a common vertex.  Throws validation_error("instance too
 * large for exact recognition") beyond the work budget.  pre: k >= 2.
 */
HellyReport is_k_helly(const Graph& g, int k, const RecognitionBudget& budget = {});

/** Relaxed variant: common vertex within distance radii[z] + alpha.  pre: alpha >= 0. */
HellyReport is_k_alpha_helly(const Graph& g, int k, int alpha, const RecognitionBudget& budget = {});

struct UnimodalReport {
  bool unimodal = true;
  std::optional<Vertex> violator;  // local minimum that is not global
};

/**
 * Checks that a vertex-indexed function is unimodal on g: every vertex
 * minimal within its closed neighborhood attains the global minimum.
 * pre: f.size() == n.
 */
UnimodalReport check_unimodal(const Graph& g, std::span<const Value> f);

/** Maximum-cardinality-search test for a perfect elimination order. */
bool is_chordal(const Graph& g);

}  // namespace helly
