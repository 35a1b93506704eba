#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "helly/graph.hpp"
#include "helly/vertex_set.hpp"

namespace helly {

/**
 * Uniform sampling of ceil(3 ln n / eps) vertices with replacement; returns
 * every vertex within distance r of all samples.  Guarantees: any vertex
 * with eccentricity <= r is always returned; a returned vertex covers at
 * least (1 - eps) n vertices at radius r except with probability n^{-3}
 * per vertex.  pre: 0 < eps <= 1, r >= 0.
 */
VertexSet dominating_candidates(const Graph& g, std::int64_t r, double eps, std::uint64_t seed);

struct DecideOptions {
  double eps_scale = 3.0;  // scales the log factor inside eps
  int max_restarts = 1;    // fresh-seed retries after an oversized S_i
};

/** eps = min(1/2, sqrt(eps_scale * ln(max(n, 2)) / (k * n))). */
double decide_epsilon(Vertex n, int k, double eps_scale = 3.0);

struct DecisionOutcome {
  bool accepted = false;
  std::optional<Vertex> witness;       // vertex with eccentricity <= r when one was proven
  std::int64_t bfs_calls = 0;
  int restarts = 0;
  std::vector<std::int64_t> s_sizes;   // |S_i| per refinement round of the final attempt
};

/**
 * One-sided radius decision for a k-Helly-like graph: accept means the
 * candidate chain stayed non-empty through k refinement rounds (or an
 * explicit witness with eccentricity <= r was found); reject means some
 * intersection emptied.  On a graph whose balls satisfy the k-wise Helly
 * property with slack alpha, accept implies radius <= r + alpha, and any
 * vertex with eccentricity <= r survives every round, so reject implies
 * radius > r.  Throws algorithm_error("sampling failure") when an
 * uncovered set exceeds eps * n in every allowed attempt.
 * pre: k >= 2, 0 <= r <= n - 1.
 */
DecisionOutcome decide_radius(const Graph& g, std::int64_t r, int k, std::uint64_t seed,
                              const DecideOptions& options = {});

struct RadiusResult {
  std::int64_t radius = 0;  // smallest accepted r
  int alpha = 0;            // slack: true radius lies in [radius, radius + alpha]
  std::int64_t decision_calls = 0;
  std::int64_t bfs_calls = 0;
};

/**
 * Binary search over r in [0, n - 1] with decide_radius; exactly
 * ceil(log2 n) decisions (none for n = 1).  pre: k >= 2, alpha >= 0.
 */
RadiusResult radius(const Graph& g, int k, int alpha, std::uint64_t seed, const DecideOptions& options = {});

}  // namespace helly
