#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "helly/gates.hpp"
#include "helly/graph.hpp"

namespace helly {

enum class Objective { eccentricity, total_distance };

/**
 * Vertices visited by a local search, with the objective value at each.
 * Values are strictly decreasing; length() is the number of improving
 * steps taken after the start vertex.
 */
struct SearchTrace {
  Objective objective = Objective::eccentricity;
  std::vector<Vertex> visited;
  std::vector<Value> values;
  std::int64_t sample_size = 0;  // |U(p)| before the empty-sample fallback
  std::int64_t bfs_calls = 0;
  std::int64_t gate_builds = 0;
  std::int64_t length() const { return static_cast<std::int64_t>(visited.size()) - 1; }
};

struct SearchOptions {
  std::optional<double> sample_probability;     // default n^{-1/2}
  std::optional<std::int64_t> step_budget;      // default ceil(10 * sqrt(n) * ln n)
};

struct CenterResult {
  Vertex vertex = 0;
  Value value = 0;
  SearchTrace trace;
};

struct MedianResult {
  std::vector<Vertex> medians;  // ascending
  Value value = 0;
  SearchTrace trace;
};

/**
 * Samples each vertex independently with probability p (default n^{-1/2}),
 * evaluates the objective on every sampled vertex by BFS, and returns the
 * best one (ties to the lowest index).  An empty sample falls back to one
 * uniformly random vertex.  The returned trace holds the start vertex and
 * its value.
 */
std::pair<Vertex, SearchTrace> sample_start(const Graph& g, const CostFn& c, Objective objective, std::uint64_t seed,
                                            const SearchOptions& options = {});

struct StepResult {
  Value objective = 0;                  // objective value at u
  std::optional<Vertex> improved;       // first improving neighbor, ascending
  std::int64_t bfs_calls = 0;
  std::int64_t gate_builds = 0;
};

/**
 * One eccentricity descent step at u: builds gate tables at u and tests
 * every neighbor v with two QValues evaluations (over the set of farthest
 * cost-weighted vertices and over the near-threshold set).  On a Helly
 * graph the test is exact: a neighbor is returned iff its eccentricity is
 * strictly smaller, with no BFS from the neighbors.
 */
StepResult center_step(const Graph& g, const CostFn& c, Vertex u);

/** Same shape for total distance: one QValues evaluation over all vertices. */
StepResult median_step(const Graph& g, const CostFn& c, Vertex u);

/**
 * Cost-weighted center by sampled start + gated descent.  Exact on Helly
 * graphs (the objective is unimodal there).  Throws algorithm_error when
 * the step budget is exhausted or a gate is missing (non-Helly input).
 * All-zero costs return vertex 0 with value 0.
 */
CenterResult find_center(const Graph& g, const CostFn& c, std::uint64_t seed, const SearchOptions& options = {});

/**
 * Cost-weighted median set.  Descends to one median u, then collects the
 * neighbors whose total distance ties u; on a Helly graph with positive
 * costs that set is complete and a clique.  Zero costs can break the
 * clique property; a non-clique result throws algorithm_error rather than
 * returning a possibly incomplete set.  All-zero costs return every vertex.
 */
MedianResult find_medians(const Graph& g, const CostFn& c, std::uint64_t seed, const SearchOptions& options = {});

}  // namespace helly
