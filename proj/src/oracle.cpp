#include "helly/oracle.hpp"

#include <algorithm>
#include <thread>

namespace helly {

namespace {

template <typename Acc>
void sweep_rows(const Graph& g, const CostFn& c, Vertex lo, Vertex hi, std::vector<Value>& ecc,
                std::vector<Value>& total_dist, std::vector<std::int32_t>& unit_ecc) {
  const Vertex n = g.vertex_count();
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex v = lo; v < hi; ++v) {
    bfs_fill(g, v, dist, queue);
    Acc e = 0, sum = 0;
    std::int32_t ue = 0;
    for (Vertex u = 0; u < n; ++u) {
      std::int32_t d = dist[static_cast<std::size_t>(u)];
      if (d > ue) ue = d;
      Acc val = static_cast<Acc>(c[u]) * static_cast<Acc>(d);
      if (val > e) e = val;
      sum += val;
    }
    ecc[static_cast<std::size_t>(v)] = static_cast<Value>(e);
    total_dist[static_cast<std::size_t>(v)] = static_cast<Value>(sum);
    unit_ecc[static_cast<std::size_t>(v)] = ue;
  }
}

bool fits_u64(const Graph& g, const CostFn& c) {
  Cost mc = 0;
  for (Cost v : c.values()) mc = std::max(mc, v);
  Value worst = static_cast<Value>(mc) * static_cast<Value>(g.vertex_count());
  worst *= static_cast<Value>(g.vertex_count());
  return worst <= static_cast<Value>(~0ull);
}

}  // namespace

ApspSummary apsp_summary(const Graph& g, const CostFn& c, Vertex max_n, int threads) {
  require_matching_costs(g, c);
  const Vertex n = g.vertex_count();
  if (n > max_n)
    throw validation_error("instance too large for all-pairs oracle (n=" + std::to_string(n) +
                           ", budget=" + std::to_string(max_n) + ")");
  if (threads < 1) throw validation_error("thread count must be at least 1");

  ApspSummary s;
  s.ecc.resize(static_cast<std::size_t>(n));
  s.total_dist.resize(static_cast<std::size_t>(n));
  s.unit_ecc.resize(static_cast<std::size_t>(n));
  s.bfs_calls = n;

  auto sweep = fits_u64(g, c) ? sweep_rows<std::uint64_t> : sweep_rows<Value>;
  int workers = static_cast<int>(std::min<std::int64_t>(threads, n));
  if (workers <= 1) {
    sweep(g, c, 0, n, s.ecc, s.total_dist, s.unit_ecc);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    Vertex chunk = (n + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
      Vertex lo = t * chunk;
      Vertex hi = std::min<Vertex>(lo + chunk, n);
      if (lo >= hi) break;
      pool.emplace_back(sweep, std::cref(g), std::cref(c), lo, hi, std::ref(s.ecc), std::ref(s.total_dist),
                        std::ref(s.unit_ecc));
    }
    for (auto& th : pool) th.join();
  }

  s.radius = s.ecc[0];
  s.diameter = s.unit_ecc[0];
  for (Vertex v = 1; v < n; ++v) {
    s.radius = std::min(s.radius, s.ecc[static_cast<std::size_t>(v)]);
    s.diameter = std::max<std::int64_t>(s.diameter, s.unit_ecc[static_cast<std::size_t>(v)]);
  }
  Value best_td = s.total_dist[0];
  for (Vertex v = 1; v < n; ++v) best_td = std::min(best_td, s.total_dist[static_cast<std::size_t>(v)]);
  for (Vertex v = 0; v < n; ++v) {
    if (s.ecc[static_cast<std::size_t>(v)] == s.radius) s.center.push_back(v);
    if (s.total_dist[static_cast<std::size_t>(v)] == best_td) s.median.push_back(v);
  }
  return s;
}

DistanceMatrix distance_matrix(const Graph& g, Vertex max_n) {
  const Vertex n = g.vertex_count();
  if (n > max_n)
    throw validation_error("instance too large for all-pairs oracle (n=" + std::to_string(n) +
                           ", budget=" + std::to_string(max_n) + ")");
  std::vector<std::int32_t> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<Vertex> queue(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    std::span<std::int32_t> row(d.data() + static_cast<std::size_t>(v) * static_cast<std::size_t>(n),
                                static_cast<std::size_t>(n));
    bfs_fill(g, v, row, queue);
  }
  return DistanceMatrix(n, std::move(d));
}

namespace {

GateCheck fail(Vertex w, std::string clause) {
  GateCheck c;
  c.ok = false;
  c.vertex = w;
  c.violation = std::move(clause);
  return c;
}

// z is a valid gate for w iff dist(w, z) <= d - 2, dist(v, z) == 2, and z
// is adjacent to every x in N(v) at distance d - 1 from w.
bool valid_gate(const Graph& g, const DistanceMatrix& dm, Vertex pivot, Vertex w, std::int32_t d, Vertex z) {
  if (z < 0 || z >= g.vertex_count()) return false;
  if (dm.at(w, z) > d - 2) return false;
  if (dm.at(pivot, z) != 2) return false;
  for (Vertex x : g.neighbors(pivot))
    if (dm.at(x, w) == d - 1 && !g.has_edge(x, z)) return false;
  return true;
}

}  // namespace

GateCheck verify_gate_tables(const Graph& g, const GateTables& tables, const DistanceMatrix& dm) {
  const Vertex n = g.vertex_count();
  const Vertex v = tables.pivot;
  if (v < 0 || v >= n) return fail(-1, "pivot out of range");
  if (static_cast<Vertex>(tables.gate.size()) != n || static_cast<Vertex>(tables.pgate.size()) != n ||
      static_cast<Vertex>(tables.dist.dist.size()) != n)
    return fail(-1, "table size mismatch");

  for (Vertex w = 0; w < n; ++w) {
    std::int32_t d = dm.at(v, w);
    if (tables.dist.dist[static_cast<std::size_t>(w)] != d) return fail(w, "pivot distance row is wrong");
    Vertex gw = tables.gate[static_cast<std::size_t>(w)];
    Vertex pg = tables.pgate[static_cast<std::size_t>(w)];
    if (d < 2) {
      if (gw != -1 || pg != -1) return fail(w, "entry defined below distance 2");
      continue;
    }
    if (gw < 0 || gw >= n) return fail(w, "gate out of range");
    if (pg < 0 || pg >= n) return fail(w, "pseudo-gate out of range");
    if (dm.at(w, gw) > d - 2) return fail(w, "gate farther than d - 2 from w");
    if (dm.at(v, gw) != 2) return fail(w, "gate not at distance 2 from the pivot");
    for (Vertex x : g.neighbors(v))
      if (dm.at(x, w) == d - 1 && !g.has_edge(x, gw))
        return fail(w, "gate misses a nearest pivot-neighbor of w");
    if (dm.at(w, pg) > d - 1) return fail(w, "pseudo-gate farther than d - 1 from w");
    // v itself lies in N[v] at distance d from w, so pg must cover it.
    if (!(pg == v || g.has_edge(v, pg))) return fail(w, "pseudo-gate misses the pivot");
    for (Vertex x : g.neighbors(v))
      if (dm.at(x, w) <= d && !(x == pg || g.has_edge(x, pg)))
        return fail(w, "pseudo-gate misses a covered pivot-neighbor");
    // pg must sit in the closed neighborhood of some valid gate; the
    // table's own gate is the cheap witness, full scan otherwise.
    bool anchored = (pg == gw || g.has_edge(pg, gw));
    for (Vertex z = 0; !anchored && z < n; ++z)
      if ((pg == z || g.has_edge(pg, z)) && valid_gate(g, dm, v, w, d, z)) anchored = true;
    if (!anchored) return fail(w, "pseudo-gate not adjacent to any valid gate");
  }
  return {};
}

GateCheck verify_gate_tables(const Graph& g, const GateTables& tables, Vertex max_n) {
  return verify_gate_tables(g, tables, distance_matrix(g, max_n));
}

}  // namespace helly
