#include "helly/recognition.hpp"

#include <algorithm>
#include <cmath>

#include "helly/oracle.hpp"

namespace helly {

namespace {

HellyReport run_berge_check(const Graph& g, int k, int alpha, const RecognitionBudget& budget) {
  if (k < 2) throw validation_error("k must be at least 2");
  if (alpha < 0) throw validation_error("alpha must be non-negative");
  const Vertex n = g.vertex_count();
  double work = std::pow(static_cast<double>(n), k + 1) * static_cast<double>(n) * static_cast<double>(n);
  if (work > budget.max_work)
    throw validation_error("instance too large for exact recognition (n=" + std::to_string(n) +
                           ", k=" + std::to_string(k) + ")");

  HellyReport report;
  report.k = k;
  report.alpha = alpha;
  if (n < k + 1) return report;  // no (k+1)-subsets: vacuously true

  const DistanceMatrix dm = distance_matrix(g, n);
  const int ss = k + 1;
  std::vector<Vertex> subset(static_cast<std::size_t>(ss));
  for (int i = 0; i < ss; ++i) subset[static_cast<std::size_t>(i)] = i;
  std::vector<std::int32_t> radii(static_cast<std::size_t>(n));
  std::vector<std::int32_t> scratch(static_cast<std::size_t>(ss));

  while (true) {
    // Minimal ball family for this subset: each center z gets the k-th
    // smallest of its distances to the subset, so every ball holds at
    // least k subset members and shrinking any ball would drop below k.
    for (Vertex z = 0; z < n; ++z) {
      for (int i = 0; i < ss; ++i) scratch[static_cast<std::size_t>(i)] = dm.at(z, subset[static_cast<std::size_t>(i)]);
      std::nth_element(scratch.begin(), scratch.begin() + (k - 1), scratch.end());
      radii[static_cast<std::size_t>(z)] = scratch[static_cast<std::size_t>(k - 1)] + alpha;
    }
    bool found = false;
    for (Vertex x = 0; x < n && !found; ++x) {
      bool ok = true;
      for (Vertex z = 0; z < n; ++z)
        if (dm.at(x, z) > radii[static_cast<std::size_t>(z)]) {
          ok = false;
          break;
        }
      found = ok;
    }
    if (!found) {
      report.holds = false;
      for (Vertex z = 0; z < n; ++z) radii[static_cast<std::size_t>(z)] -= alpha;
      report.witness = HellyWitness{subset, radii};
      return report;
    }
    // next (k+1)-subset in lexicographic order
    int i = ss - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - ss + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < ss; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }
  return report;
}

}  // namespace

HellyReport is_k_helly(const Graph& g, int k, const RecognitionBudget& budget) {
  return run_berge_check(g, k, 0, budget);
}

HellyReport is_k_alpha_helly(const Graph& g, int k, int alpha, const RecognitionBudget& budget) {
  return run_berge_check(g, k, alpha, budget);
}

UnimodalReport check_unimodal(const Graph& g, std::span<const Value> f) {
  const Vertex n = g.vertex_count();
  if (static_cast<Vertex>(f.size()) != n)
    throw validation_error("function has " + std::to_string(f.size()) + " entries for a graph with " +
                           std::to_string(n) + " vertices");
  Value global = f[0];
  for (Vertex v = 1; v < n; ++v) global = std::min(global, f[static_cast<std::size_t>(v)]);
  for (Vertex v = 0; v < n; ++v) {
    if (f[static_cast<std::size_t>(v)] == global) continue;
    bool local_min = true;
    for (Vertex u : g.neighbors(v))
      if (f[static_cast<std::size_t>(u)] < f[static_cast<std::size_t>(v)]) {
        local_min = false;
        break;
      }
    if (local_min) return {false, v};
  }
  return {true, std::nullopt};
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination order iff the graph is chordal.
  const Vertex n = g.vertex_count();
  std::vector<Vertex> weight(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> pos(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (pos[static_cast<std::size_t>(v)] < 0 && (best < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
        best = v;
    pos[static_cast<std::size_t>(best)] = step;
    order[static_cast<std::size_t>(step)] = best;
    for (Vertex u : g.neighbors(best))
      if (pos[static_cast<std::size_t>(u)] < 0) ++weight[static_cast<std::size_t>(u)];
  }
  std::vector<char> mark(static_cast<std::size_t>(n), 0);
  for (Vertex step = 1; step < n; ++step) {
    Vertex v = order[static_cast<std::size_t>(step)];
    Vertex parent = -1;
    for (Vertex u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] < step && (parent < 0 || pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(parent)]))
        parent = u;
    if (parent < 0) continue;
    for (Vertex u : g.neighbors(parent)) mark[static_cast<std::size_t>(u)] = 1;
    mark[static_cast<std::size_t>(parent)] = 1;
    bool ok = true;
    for (Vertex u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] < step && !mark[static_cast<std::size_t>(u)]) {
        ok = false;
        break;
      }
    for (Vertex u : g.neighbors(parent)) mark[static_cast<std::size_t>(u)] = 0;
    mark[static_cast<std::size_t>(parent)] = 0;
    if (!ok) return false;
  }
  return true;
}

}  // namespace helly
