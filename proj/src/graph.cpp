#include "helly/graph.hpp"

#include <algorithm>
#include <string>

namespace helly {

Graph Graph::from_edge_list(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 1) throw validation_error("graph must have at least one vertex");

  std::vector<std::pair<Vertex, Vertex>> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw validation_error("edge endpoint out of range: (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    if (a == b) throw validation_error("self-loop at vertex " + std::to_string(a));
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(canon.size());
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : canon) {
    ++g.offsets_[static_cast<std::size_t>(a) + 1];
    ++g.offsets_[static_cast<std::size_t>(b) + 1];
  }
  for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.adj_.resize(static_cast<std::size_t>(2 * g.m_));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : canon) {
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(a)]++)] = b;
    g.adj_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(b)]++)] = a;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v)];
    auto end = g.adj_.begin() + g.offsets_[static_cast<std::size_t>(v) + 1];
    std::sort(nb, end);
  }

  std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  bfs_fill(g, 0, dist, queue);
  for (Vertex v = 0; v < n; ++v)
    if (dist[static_cast<std::size_t>(v)] < 0) throw validation_error("graph is not connected");

  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

void bfs_fill(const Graph& g, Vertex source, std::span<std::int32_t> dist, std::span<Vertex> queue) {
  std::fill(dist.begin(), dist.end(), -1);
  dist[static_cast<std::size_t>(source)] = 0;
  queue[0] = source;
  std::size_t head = 0, tail = 1;
  while (head < tail) {
    Vertex u = queue[head++];
    std::int32_t du = dist[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        queue[tail++] = w;
      }
    }
  }
}

DistanceRow bfs(const Graph& g, Vertex source) {
  if (source < 0 || source >= g.vertex_count()) throw validation_error("bfs source out of range");
  DistanceRow row;
  row.source = source;
  row.dist.resize(static_cast<std::size_t>(g.vertex_count()));
  std::vector<Vertex> queue(static_cast<std::size_t>(g.vertex_count()));
  bfs_fill(g, source, row.dist, queue);
  return row;
}

VertexSet ball(const Graph& g, Vertex v, std::int64_t r) {
  if (r < 0) throw validation_error("ball radius must be non-negative");
  DistanceRow row = bfs(g, v);
  return VertexSet::from_row_threshold(row.dist, r);
}

Value eccentricity_of_row(const CostFn& c, std::span<const std::int32_t> dist) {
  Value best = 0;
  for (std::size_t u = 0; u < dist.size(); ++u) {
    Value val = static_cast<Value>(c[static_cast<Vertex>(u)]) * static_cast<Value>(dist[u]);
    if (val > best) best = val;
  }
  return best;
}

Value total_distance_of_row(const CostFn& c, std::span<const std::int32_t> dist) {
  Value sum = 0;
  for (std::size_t u = 0; u < dist.size(); ++u)
    sum += static_cast<Value>(c[static_cast<Vertex>(u)]) * static_cast<Value>(dist[u]);
  return sum;
}

void require_matching_costs(const Graph& g, const CostFn& c) {
  if (c.size() != g.vertex_count())
    throw validation_error("cost function has " + std::to_string(c.size()) + " entries for a graph with " +
                           std::to_string(g.vertex_count()) + " vertices");
}

Value eccentricity(const Graph& g, const CostFn& c, Vertex v) {
  require_matching_costs(g, c);
  DistanceRow row = bfs(g, v);
  return eccentricity_of_row(c, row.dist);
}

Value total_distance(const Graph& g, const CostFn& c, Vertex v) {
  require_matching_costs(g, c);
  DistanceRow row = bfs(g, v);
  return total_distance_of_row(c, row.dist);
}

}  // namespace helly
