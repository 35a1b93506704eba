#include "helly/khelly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helly/rng.hpp"

namespace helly {

namespace {

std::int64_t sample_count(Vertex n, double eps) {
  double d = std::max(static_cast<double>(n), 2.0);
  return static_cast<std::int64_t>(std::ceil(3.0 * std::log(d) / eps));
}

struct Scratch {
  std::vector<std::int32_t> dist;
  std::vector<Vertex> queue;
  explicit Scratch(Vertex n) : dist(static_cast<std::size_t>(n)), queue(static_cast<std::size_t>(n)) {}
};

void intersect_ball(const Graph& g, Vertex x, std::int64_t r, Scratch& scratch, VertexSet& c,
                    std::int64_t& bfs_calls) {
  bfs_fill(g, x, scratch.dist, scratch.queue);
  ++bfs_calls;
  c.intersect_with(VertexSet::from_row_threshold(scratch.dist, r));
}

std::vector<Vertex> draw_samples(const Graph& g, std::int64_t count, Rng& rng) {
  std::vector<Vertex> samples(static_cast<std::size_t>(count));
  for (auto& x : samples) x = rng.vertex(g.vertex_count());
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  return samples;
}

}  // namespace

double decide_epsilon(Vertex n, int k, double eps_scale) {
  if (n < 1) throw validation_error("vertex count must be positive");
  if (k < 1) throw validation_error("k must be positive");
  if (!(eps_scale > 0.0)) throw validation_error("eps scale must be positive");
  double d = std::max(static_cast<double>(n), 2.0);
  return std::min(0.5, std::sqrt(eps_scale * std::log(d) / (static_cast<double>(k) * static_cast<double>(n))));
}

VertexSet dominating_candidates(const Graph& g, std::int64_t r, double eps, std::uint64_t seed) {
  if (r < 0) throw validation_error("radius must be nonnegative");
  if (!(eps > 0.0 && eps < 1.0)) throw validation_error("eps must lie in (0, 1)");
  Vertex n = g.vertex_count();
  Scratch scratch(n);
  Rng rng(seed);
  std::int64_t bfs_calls = 0;
  VertexSet c = VertexSet::full_set(n);
  for (Vertex x : draw_samples(g, sample_count(n, eps), rng)) {
    if (c.empty()) break;
    intersect_ball(g, x, r, scratch, c, bfs_calls);
  }
  return c;
}

DecisionOutcome decide_radius(const Graph& g, std::int64_t r, int k, std::uint64_t seed,
                              const DecideOptions& options) {
  Vertex n = g.vertex_count();
  if (k < 2) throw validation_error("k must be at least 2");
  if (r < 0 || r >= n) throw validation_error("radius out of range [0, n - 1]");
  if (options.max_restarts < 0) throw validation_error("max_restarts must be nonnegative");
  double eps = decide_epsilon(n, k, options.eps_scale);
  double uncovered_limit = eps * static_cast<double>(n);
  std::int64_t samples = sample_count(n, eps);

  DecisionOutcome outcome;
  Scratch scratch(n);
  Rng rng(seed);
  std::int64_t oversized = 0;
  for (int attempt = 0; attempt <= options.max_restarts; ++attempt) {
    outcome.restarts = attempt;
    outcome.s_sizes.clear();
    Rng attempt_rng(rng.fork());
    VertexSet c = VertexSet::full_set(n);
    for (Vertex x : draw_samples(g, samples, attempt_rng)) {
      if (c.empty()) break;
      intersect_ball(g, x, r, scratch, c, outcome.bfs_calls);
    }
    if (c.empty()) return outcome;  // no vertex covers every sample: radius > r
    bool failed = false;
    for (int round = 1; round <= k; ++round) {
      Vertex v = c.first();
      bfs_fill(g, v, scratch.dist, scratch.queue);
      ++outcome.bfs_calls;
      // the vertices v fails to cover within r; small unless the attempt was unlucky
      std::vector<Vertex> uncovered;
      for (Vertex x = 0; x < n; ++x)
        if (scratch.dist[static_cast<std::size_t>(x)] > r) uncovered.push_back(x);
      outcome.s_sizes.push_back(static_cast<std::int64_t>(uncovered.size()));
      if (uncovered.empty()) {
        outcome.accepted = true;  // v covers everything: an explicit witness
        outcome.witness = v;
        return outcome;
      }
      if (static_cast<double>(uncovered.size()) > uncovered_limit) {
        failed = true;
        oversized = static_cast<std::int64_t>(uncovered.size());
        break;
      }
      for (Vertex x : uncovered) {
        if (c.empty()) break;
        intersect_ball(g, x, r, scratch, c, outcome.bfs_calls);
      }
      if (c.empty()) return outcome;  // some ball family has no common vertex: radius > r
    }
    if (!failed) {
      outcome.accepted = true;  // chain survived k refinement rounds
      return outcome;
    }
  }
  throw algorithm_error("sampling failure: an uncovered set of " + std::to_string(oversized) +
                        " vertices exceeded the bound " + std::to_string(uncovered_limit) + " in every attempt");
}

RadiusResult radius(const Graph& g, int k, int alpha, std::uint64_t seed, const DecideOptions& options) {
  if (k < 2) throw validation_error("k must be at least 2");
  if (alpha < 0) throw validation_error("alpha must be nonnegative");
  Vertex n = g.vertex_count();
  RadiusResult result;
  result.alpha = alpha;
  if (n == 1) return result;
  Rng rng(seed);
  std::int64_t rounds = 0;
  while ((std::int64_t(1) << rounds) < n) ++rounds;
  // Pad the range to a power of two so every path makes exactly ceil(log2 n)
  // decisions; queries beyond n - 1 clamp to n - 1, which always accepts.
  std::int64_t lo = 0;
  std::int64_t hi = (std::int64_t(1) << rounds) - 1;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    DecisionOutcome outcome = decide_radius(g, std::min<std::int64_t>(mid, n - 1), k, rng.fork(), options);
    ++result.decision_calls;
    result.bfs_calls += outcome.bfs_calls;
    if (outcome.accepted)
      hi = mid;
    else
      lo = mid + 1;
  }
  result.radius = lo;
  return result;
}

}  // namespace helly
