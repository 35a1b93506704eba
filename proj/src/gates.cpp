#include "helly/gates.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace helly {

namespace {

// Bit rows over the indices of N(pivot), W words per row.
class BitRows {
 public:
  BitRows(Vertex rows, std::size_t words) : words_(words), bits_(static_cast<std::size_t>(rows) * words, 0) {}
  std::uint64_t* row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(Vertex v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  void set(Vertex v, std::int32_t bit) { row(v)[bit >> 6] |= 1ull << (bit & 63); }
  void or_into(Vertex dst, Vertex src) {
    std::uint64_t* d = row(dst);
    const std::uint64_t* s = row(src);
    for (std::size_t i = 0; i < words_; ++i) d[i] |= s[i];
  }
  std::int64_t popcount(Vertex v) const {
    const std::uint64_t* r = row(v);
    std::int64_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += std::popcount(r[i]);
    return c;
  }
  template <typename F>
  void for_each_bit(Vertex v, F&& f) const {
    const std::uint64_t* r = row(v);
    for (std::size_t i = 0; i < words_; ++i) {
      std::uint64_t w = r[i];
      while (w != 0) {
        f(static_cast<std::int32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

[[noreturn]] void throw_gate_not_found(const char* kind, Vertex w, Vertex pivot) {
  throw algorithm_error(std::string("gate not found: no ") + kind + " for vertex " + std::to_string(w) +
                        " with pivot " + std::to_string(pivot) + " (graph is not Helly)");
}

}  // namespace

GateTables build_gate_tables(const Graph& g, Vertex pivot) {
  const Vertex n = g.vertex_count();
  if (pivot < 0 || pivot >= n) throw validation_error("pivot out of range");

  GateTables t;
  t.pivot = pivot;
  t.dist = bfs(g, pivot);
  t.bfs_calls = 1;
  t.gate.assign(static_cast<std::size_t>(n), -1);
  t.pgate.assign(static_cast<std::size_t>(n), -1);
  const auto& dist = t.dist.dist;

  const auto np = g.neighbors(pivot);
  const Vertex dv = static_cast<Vertex>(np.size());
  const std::size_t words = (static_cast<std::size_t>(dv) + 63) / 64;
  if (static_cast<std::int64_t>(n) * static_cast<std::int64_t>(words) > 16'000'000)
    throw validation_error("gate tables need too much memory for this pivot degree");

  std::int32_t maxd = 0;
  for (std::int32_t d : dist) maxd = std::max(maxd, d);
  if (maxd < 2) return t;  // no vertex beyond the closed neighborhood

  // Position of each vertex inside N(pivot), -1 elsewhere.
  std::vector<std::int32_t> np_index(static_cast<std::size_t>(n), -1);
  for (Vertex i = 0; i < dv; ++i) np_index[static_cast<std::size_t>(np[static_cast<std::size_t>(i)])] = i;

  // cn[z] = |N(z) /\ N(pivot)|; closed variant adds z and the pivot when
  // z is itself a pivot-neighbor.
  std::vector<std::int32_t> cn(static_cast<std::size_t>(n), 0);
  for (Vertex z = 0; z < n; ++z)
    for (Vertex y : g.neighbors(z))
      if (np_index[static_cast<std::size_t>(y)] >= 0) ++cn[static_cast<std::size_t>(z)];
  auto cnc = [&](Vertex z) {
    return cn[static_cast<std::size_t>(z)] + (z == pivot ? 1 : (np_index[static_cast<std::size_t>(z)] >= 0 ? 2 : 0));
  };

  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(maxd) + 1);
  for (Vertex v = 0; v < n; ++v) layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);

  // pr: positions of N(pivot)-vertices at distance exactly d-1 from w (the
  // nearest pivot-neighbors of w); wb: positions at distance <= d from w.
  BitRows pr(n, words), wb(n, words), nb1(n, words);
  for (std::int32_t d = 1; d <= 2 && d <= maxd; ++d)
    for (Vertex y : layers[static_cast<std::size_t>(d)]) {
      for (Vertex x : g.neighbors(y))
        if (np_index[static_cast<std::size_t>(x)] >= 0) nb1.set(y, np_index[static_cast<std::size_t>(x)]);
      if (np_index[static_cast<std::size_t>(y)] >= 0) nb1.set(y, np_index[static_cast<std::size_t>(y)]);
    }

  std::vector<std::int32_t> scratch_dist;
  std::vector<Vertex> scratch_queue;

  for (std::int32_t d = 2; d <= maxd; ++d) {
    // Pass one: nearest pivot-neighbor sets and gates.
    for (Vertex w : layers[static_cast<std::size_t>(d)]) {
      if (d == 2) {
        for (Vertex y : g.neighbors(w))
          if (dist[static_cast<std::size_t>(y)] == 1) pr.set(w, np_index[static_cast<std::size_t>(y)]);
        t.gate[static_cast<std::size_t>(w)] = w;
        continue;
      }
      for (Vertex y : g.neighbors(w))
        if (dist[static_cast<std::size_t>(y)] == d - 1) pr.or_into(w, y);
      std::int64_t pw = pr.popcount(w);
      // A parent's gate sits within d - 2 of w; it is valid for w exactly
      // when its pivot-neighborhood overlap count matches |pr(w)|.
      Vertex found = -1;
      for (Vertex y : g.neighbors(w)) {
        if (dist[static_cast<std::size_t>(y)] != d - 1) continue;
        Vertex z = t.gate[static_cast<std::size_t>(y)];
        if (cn[static_cast<std::size_t>(z)] == pw) {
          found = z;
          break;
        }
      }
      if (found < 0) {
        // Fallback: exact distances from w, then scan the second layer.
        scratch_dist.resize(static_cast<std::size_t>(n));
        scratch_queue.resize(static_cast<std::size_t>(n));
        bfs_fill(g, w, scratch_dist, scratch_queue);
        ++t.bfs_calls;
        ++t.tier2_fallbacks;
        for (Vertex z : layers[2]) {
          if (scratch_dist[static_cast<std::size_t>(z)] <= d - 2 && cn[static_cast<std::size_t>(z)] == pw) {
            found = z;
            break;
          }
        }
        if (found < 0) throw_gate_not_found("gate", w, pivot);
      }
      t.gate[static_cast<std::size_t>(w)] = found;
    }
    // Pass two: covered pivot-neighbor sets and pseudo-gates (needs the
    // pr rows of the whole layer, hence the second sweep).
    auto or_rows = [words](std::uint64_t* dst, const std::uint64_t* src) {
      for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
    };
    for (Vertex w : layers[static_cast<std::size_t>(d)]) {
      if (d == 2) {
        // pivot-neighbors within distance 2 of w: those adjacent to N[w]
        or_rows(wb.row(w), nb1.row(w));
        for (Vertex y : g.neighbors(w))
          if (dist[static_cast<std::size_t>(y)] <= 2) or_rows(wb.row(w), nb1.row(y));
      } else {
        for (Vertex y : g.neighbors(w)) {
          std::int32_t dy = dist[static_cast<std::size_t>(y)];
          if (dy == d - 1) or_rows(wb.row(w), wb.row(y));             // parent: within d - 1 of y
          else if (dy == d) or_rows(wb.row(w), pr.row(y));            // sibling: its nearest set is within d
        }
      }
      std::int64_t qw = wb.popcount(w) + 1;  // + the pivot itself
      Vertex found = -1;
      pr.for_each_bit(w, [&](std::int32_t bit) {
        if (found >= 0) return;
        Vertex z = np[static_cast<std::size_t>(bit)];
        if (cnc(z) == qw) found = z;
      });
      if (found < 0) throw_gate_not_found("pseudo-gate", w, pivot);
      t.pgate[static_cast<std::size_t>(w)] = found;
    }
  }
  return t;
}

QValues q_values(const Graph& g, const GateTables& tables, const VertexSet& a, const CostFn& c) {
  const Vertex n = g.vertex_count();
  require_matching_costs(g, c);
  if (a.universe() != n) throw validation_error("vertex set universe does not match the graph");
  if (static_cast<Vertex>(tables.dist.dist.size()) != n) throw validation_error("gate tables do not match the graph");
  const Vertex pivot = tables.pivot;
  const auto& dist = tables.dist.dist;

  // Fold the cost of every member at distance >= 2 onto its gate (nearest
  // pivot-neighbor test) and its pseudo-gate (within-distance test); the
  // per-neighbor sums below then need one adjacency scan each.
  std::vector<Value> alpha(static_cast<std::size_t>(n), 0), beta(static_cast<std::size_t>(n), 0);
  Value total = 0;
  bool missing_entry = false;
  a.for_each([&](Vertex w) {
    Value cw = c[w];
    total += cw;
    if (dist[static_cast<std::size_t>(w)] >= 2) {
      Vertex gw = tables.gate[static_cast<std::size_t>(w)];
      Vertex pw = tables.pgate[static_cast<std::size_t>(w)];
      if (gw < 0 || pw < 0) {
        missing_entry = true;
        return;
      }
      alpha[static_cast<std::size_t>(gw)] += cw;
      beta[static_cast<std::size_t>(pw)] += cw;
    }
  });
  if (missing_entry) throw validation_error("gate tables are incomplete for this set");

  const auto np = g.neighbors(pivot);
  QValues q;
  q.pivot = pivot;
  q.q_plus.resize(np.size());
  q.q_eq.resize(np.size());
  q.q_minus.resize(np.size());
  for (std::size_t i = 0; i < np.size(); ++i) {
    Vertex u = np[i];
    Value minus = a.contains(u) ? static_cast<Value>(c[u]) : 0;
    Value le = beta[static_cast<std::size_t>(u)];
    if (dist[static_cast<std::size_t>(u)] == 1 && a.contains(u)) le += c[u];
    for (Vertex x : g.neighbors(u)) {
      minus += alpha[static_cast<std::size_t>(x)];
      le += beta[static_cast<std::size_t>(x)];
      if (dist[static_cast<std::size_t>(x)] == 1 && a.contains(x)) le += c[x];
    }
    q.q_minus[i] = minus;
    q.q_eq[i] = le - minus;
    q.q_plus[i] = total - le;
  }
  return q;
}

QValues q_values_baseline(const Graph& g, Vertex v, const VertexSet& a, const CostFn& c) {
  const Vertex n = g.vertex_count();
  require_matching_costs(g, c);
  if (v < 0 || v >= n) throw validation_error("pivot out of range");
  if (a.universe() != n) throw validation_error("vertex set universe does not match the graph");

  DistanceRow from_v = bfs(g, v);
  const auto np = g.neighbors(v);
  QValues q;
  q.pivot = v;
  q.q_plus.resize(np.size());
  q.q_eq.resize(np.size());
  q.q_minus.resize(np.size());
  for (std::size_t i = 0; i < np.size(); ++i) {
    DistanceRow from_u = bfs(g, np[i]);
    Value plus = 0, eq = 0, minus = 0;
    a.for_each([&](Vertex w) {
      std::int32_t du = from_u.dist[static_cast<std::size_t>(w)];
      std::int32_t dvw = from_v.dist[static_cast<std::size_t>(w)];
      if (du > dvw) plus += c[w];
      else if (du == dvw) eq += c[w];
      else minus += c[w];
    });
    q.q_plus[i] = plus;
    q.q_eq[i] = eq;
    q.q_minus[i] = minus;
  }
  return q;
}

}  // namespace helly
