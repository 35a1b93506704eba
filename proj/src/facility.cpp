#include "helly/facility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helly/rng.hpp"

namespace helly {

namespace {

Value row_objective(Objective objective, const CostFn& c, std::span<const std::int32_t> dist) {
  return objective == Objective::eccentricity ? eccentricity_of_row(c, dist) : total_distance_of_row(c, dist);
}

std::int64_t default_step_budget(Vertex n) {
  double d = static_cast<double>(n);
  return static_cast<std::int64_t>(std::ceil(10.0 * std::sqrt(d) * std::log(std::max(d, 2.0))));
}

struct SearchParams {
  double p = 0.0;
  std::int64_t budget = 0;
};

SearchParams resolve_options(Vertex n, const SearchOptions& options) {
  SearchParams params;
  params.p = options.sample_probability.value_or(1.0 / std::sqrt(static_cast<double>(n)));
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw validation_error("sample probability must lie in [0, 1]");
  params.budget = options.step_budget.value_or(default_step_budget(n));
  if (params.budget < 0) throw validation_error("step budget must be nonnegative");
  return params;
}

StepResult step_impl(const Graph& g, const CostFn& c, Vertex u, Objective objective,
                     std::vector<Vertex>* tied_neighbors) {
  require_matching_costs(g, c);
  if (u < 0 || u >= g.vertex_count()) throw validation_error("step vertex out of range");
  StepResult result;
  GateTables tables = build_gate_tables(g, u);
  result.bfs_calls += tables.bfs_calls;
  result.gate_builds = 1;
  std::span<const std::int32_t> dist(tables.dist.dist);
  result.objective = row_objective(objective, c, dist);
  std::span<const Vertex> nbrs = g.neighbors(u);

  if (objective == Objective::total_distance) {
    // TD(v) - TD(u) over a neighbor v is exactly q_plus - q_minus on the full set.
    QValues q = q_values(g, tables, VertexSet::full_set(g.vertex_count()), c);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (q.q_plus[i] < q.q_minus[i]) {
        if (!result.improved) result.improved = nbrs[i];
        if (!tied_neighbors) break;
      } else if (tied_neighbors && q.q_plus[i] == q.q_minus[i]) {
        tied_neighbors->push_back(nbrs[i]);
      }
    }
    return result;
  }

  Value e = result.objective;
  if (e == 0) return result;  // only u can carry cost; nothing beats zero
  // A: vertices realizing the eccentricity.  B: vertices that would breach it
  // if they moved one step farther.  All members of either carry positive cost.
  VertexSet a(g.vertex_count());
  VertexSet b(g.vertex_count());
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    Value d = static_cast<Value>(dist[static_cast<std::size_t>(w)]);
    Value cw = c[w];
    if (cw * d == e) a.insert(w);
    if (cw * (d + 1) >= e) b.insert(w);
  }
  QValues qa = q_values(g, tables, a, c);
  QValues qb = q_values(g, tables, b, c);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    // Exact: ecc(v) < ecc(u) iff every A-vertex gets closer and no B-vertex gets farther.
    if (qa.q_plus[i] == 0 && qa.q_eq[i] == 0 && qb.q_plus[i] == 0) {
      result.improved = nbrs[i];
      break;
    }
  }
  return result;
}

SearchTrace descend(const Graph& g, const CostFn& c, Objective objective, std::uint64_t seed,
                    const SearchOptions& options, std::vector<Vertex>* final_ties) {
  SearchParams params = resolve_options(g.vertex_count(), options);
  auto [start, trace] = sample_start(g, c, objective, seed, options);
  Vertex u = start;
  std::int64_t steps = 0;
  bool first = true;
  while (true) {
    std::vector<Vertex> ties;
    StepResult st = step_impl(g, c, u, objective, final_ties ? &ties : nullptr);
    trace.bfs_calls += st.bfs_calls;
    trace.gate_builds += st.gate_builds;
    if (!first) {
      trace.visited.push_back(u);
      trace.values.push_back(st.objective);
    }
    first = false;
    if (!st.improved) {
      if (final_ties) *final_ties = std::move(ties);
      break;
    }
    if (steps == params.budget)
      throw algorithm_error("step budget exhausted after " + std::to_string(steps) + " improving steps");
    ++steps;
    u = *st.improved;
  }
  return trace;
}

}  // namespace

std::pair<Vertex, SearchTrace> sample_start(const Graph& g, const CostFn& c, Objective objective, std::uint64_t seed,
                                            const SearchOptions& options) {
  require_matching_costs(g, c);
  Vertex n = g.vertex_count();
  SearchParams params = resolve_options(n, options);
  Rng rng(seed);
  std::vector<Vertex> sample;
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(params.p)) sample.push_back(v);
  SearchTrace trace;
  trace.objective = objective;
  trace.sample_size = static_cast<std::int64_t>(sample.size());
  if (sample.empty()) sample.push_back(rng.vertex(n));

  std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  Vertex best = sample.front();
  Value best_value = 0;
  bool have = false;
  for (Vertex v : sample) {
    bfs_fill(g, v, dist, queue);
    ++trace.bfs_calls;
    Value value = row_objective(objective, c, dist);
    if (!have || value < best_value) {
      have = true;
      best = v;
      best_value = value;
    }
  }
  trace.visited.push_back(best);
  trace.values.push_back(best_value);
  return {best, std::move(trace)};
}

StepResult center_step(const Graph& g, const CostFn& c, Vertex u) {
  return step_impl(g, c, u, Objective::eccentricity, nullptr);
}

StepResult median_step(const Graph& g, const CostFn& c, Vertex u) {
  return step_impl(g, c, u, Objective::total_distance, nullptr);
}

CenterResult find_center(const Graph& g, const CostFn& c, std::uint64_t seed, const SearchOptions& options) {
  require_matching_costs(g, c);
  CenterResult result;
  if (c.all_zero()) {
    result.trace.objective = Objective::eccentricity;
    result.trace.visited = {0};
    result.trace.values = {0};
    return result;
  }
  result.trace = descend(g, c, Objective::eccentricity, seed, options, nullptr);
  result.vertex = result.trace.visited.back();
  result.value = result.trace.values.back();
  return result;
}

MedianResult find_medians(const Graph& g, const CostFn& c, std::uint64_t seed, const SearchOptions& options) {
  require_matching_costs(g, c);
  MedianResult result;
  result.trace.objective = Objective::total_distance;
  if (c.all_zero()) {
    result.medians.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) result.medians[static_cast<std::size_t>(v)] = v;
    result.trace.visited = {0};
    result.trace.values = {0};
    return result;
  }
  std::vector<Vertex> ties;
  result.trace = descend(g, c, Objective::total_distance, seed, options, &ties);
  Vertex u = result.trace.visited.back();
  result.value = result.trace.values.back();
  result.medians = std::move(ties);
  result.medians.push_back(u);
  std::sort(result.medians.begin(), result.medians.end());
  for (std::size_t i = 0; i < result.medians.size(); ++i)
    for (std::size_t j = i + 1; j < result.medians.size(); ++j)
      if (!g.has_edge(result.medians[i], result.medians[j]))
        throw algorithm_error("median set is not a clique; zero costs can split it beyond a closed neighborhood");
  return result;
}

}  // namespace helly
