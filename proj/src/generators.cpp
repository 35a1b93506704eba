#include "helly/generators.hpp"

#include <algorithm>
#include <cmath>

#include "helly/rng.hpp"

namespace helly {

Family family_from_string(const std::string& name) {
  if (name == "tree") return Family::tree;
  if (name == "interval") return Family::interval;
  if (name == "king-grid") return Family::king_grid;
  if (name == "chordal") return Family::chordal;
  throw validation_error("unknown family: " + name);
}

std::string family_to_string(Family family) {
  switch (family) {
    case Family::tree: return "tree";
    case Family::interval: return "interval";
    case Family::king_grid: return "king-grid";
    case Family::chordal: return "chordal";
  }
  throw validation_error("unknown family enum value");
}

Graph gen_tree(Vertex n, std::uint64_t seed) {
  if (n < 1) throw validation_error("tree needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n >= 2) {
    // Pruefer decode: uniform over labeled trees.
    Rng rng(seed);
    std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
    for (auto& a : code) a = rng.vertex(n);
    std::vector<Vertex> deg(static_cast<std::size_t>(n), 1);
    for (Vertex a : code) ++deg[static_cast<std::size_t>(a)];
    Vertex ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex a : code) {
      edges.emplace_back(leaf, a);
      if (--deg[static_cast<std::size_t>(a)] == 1 && a < ptr) {
        leaf = a;
      } else {
        ++ptr;
        while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
        leaf = ptr;
      }
    }
    edges.emplace_back(leaf, n - 1);
  }
  return Graph::from_edge_list(n, edges);
}

namespace {

bool edges_connect(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
  auto find = [&](Vertex v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  Vertex components = n;
  for (const auto& [a, b] : edges) {
    Vertex ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

Graph gen_interval(Vertex n, std::uint64_t seed) {
  if (n < 1) throw validation_error("interval graph needs at least one vertex");
  Rng rng(seed);
  const std::uint64_t span = 4ull * static_cast<std::uint64_t>(n) + 1;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<std::pair<std::int64_t, std::int64_t>> iv(static_cast<std::size_t>(n));
    for (auto& [lo, hi] : iv) {
      std::int64_t a = static_cast<std::int64_t>(rng.bounded(span));
      std::int64_t b = static_cast<std::int64_t>(rng.bounded(span));
      lo = std::min(a, b);
      hi = std::max(a, b);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (iv[static_cast<std::size_t>(i)].first <= iv[static_cast<std::size_t>(j)].second &&
            iv[static_cast<std::size_t>(j)].first <= iv[static_cast<std::size_t>(i)].second)
          edges.emplace_back(i, j);
    if (edges_connect(n, edges)) return Graph::from_edge_list(n, edges);
  }
  throw algorithm_error("interval generator: no connected instance in 100 attempts");
}

Graph gen_king_grid(Vertex rows, Vertex cols) {
  if (rows < 1 || cols < 1) throw validation_error("king grid needs positive dimensions");
  if (static_cast<std::int64_t>(rows) * cols > 100'000'000) throw validation_error("king grid too large");
  auto id = [cols](Vertex r, Vertex c) { return r * cols + c; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex r = 0; r < rows; ++r)
    for (Vertex c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c + 1 < cols) edges.emplace_back(id(r, c), id(r + 1, c + 1));
      if (r + 1 < rows && c > 0) edges.emplace_back(id(r, c), id(r + 1, c - 1));
    }
  return Graph::from_edge_list(rows * cols, edges);
}

Graph gen_chordal(Vertex n, double density, std::uint64_t seed) {
  if (n < 1) throw validation_error("chordal graph needs at least one vertex");
  if (!(density > 0.0 && density <= 1.0)) throw validation_error("density must lie in (0, 1]");
  Rng rng(seed);
  const Vertex max_size = 2 + static_cast<Vertex>(std::lround(density * 6.0));
  auto draw_size = [&] { return 2 + static_cast<Vertex>(rng.bounded(static_cast<std::uint64_t>(max_size - 1))); };

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::vector<Vertex>> cliques;
  auto add_clique = [&edges](const std::vector<Vertex>& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) edges.emplace_back(c[i], c[j]);
  };

  Vertex created = std::min<Vertex>(n, draw_size());
  std::vector<Vertex> first(static_cast<std::size_t>(created));
  for (Vertex v = 0; v < created; ++v) first[static_cast<std::size_t>(v)] = v;
  add_clique(first);
  cliques.push_back(std::move(first));

  while (created < n) {
    // Glue a new clique onto a random existing one along a shared subset;
    // the shared part keeps the clique-tree running intersection intact.
    const std::vector<Vertex>& base = cliques[static_cast<std::size_t>(rng.bounded(cliques.size()))];
    Vertex s = draw_size();
    Vertex share = 1 + static_cast<Vertex>(
                           rng.bounded(static_cast<std::uint64_t>(std::min<Vertex>(static_cast<Vertex>(base.size()), s - 1))));
    std::vector<Vertex> pool = base;
    for (Vertex i = 0; i < share; ++i) {
      std::size_t j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.bounded(pool.size() - static_cast<std::size_t>(i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<Vertex> next(pool.begin(), pool.begin() + share);
    Vertex fresh = std::min<Vertex>(s - share, n - created);
    for (Vertex i = 0; i < fresh; ++i) next.push_back(created + i);
    created += fresh;
    add_clique(next);
    cliques.push_back(std::move(next));
  }
  return Graph::from_edge_list(n, edges);
}

namespace {

std::pair<Vertex, Vertex> squarest_dims(Vertex n) {
  Vertex best = 1;
  for (Vertex r = 1; static_cast<std::int64_t>(r) * r <= n; ++r)
    if (n % r == 0) best = r;
  return {best, n / best};
}

}  // namespace

Graph gen_helly(const GenSpec& spec) {
  switch (spec.family) {
    case Family::tree:
      return gen_tree(spec.n, spec.seed);
    case Family::interval:
      return gen_interval(spec.n, spec.seed);
    case Family::king_grid: {
      if (spec.rows > 0 || spec.cols > 0) {
        if (spec.rows > 0 && spec.cols > 0) return gen_king_grid(spec.rows, spec.cols);
        throw validation_error("king grid needs both rows and cols (or n alone)");
      }
      auto [r, c] = squarest_dims(spec.n);
      if (spec.n < 1) throw validation_error("king grid needs at least one vertex");
      return gen_king_grid(r, c);
    }
    case Family::chordal:
      throw validation_error("chordal graphs are not Helly in general; use gen_chordal");
  }
  throw validation_error("unknown family enum value");
}

}  // namespace helly
