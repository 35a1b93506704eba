#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "helly/types.hpp"

namespace helly {

// Fixed-universe vertex set backed by 64-bit words with a cached population
// count.  Used as the candidate-set representation for ball intersections.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Vertex universe) : n_(universe), words_((static_cast<std::size_t>(universe) + 63) / 64, 0) {}

  static VertexSet empty_set(Vertex universe) { return VertexSet(universe); }

  static VertexSet full_set(Vertex universe) {
    VertexSet s(universe);
    if (universe == 0) return s;
    for (auto& w : s.words_) w = ~0ull;
    s.words_.back() = last_word_mask(universe);
    s.count_ = universe;
    return s;
  }

  // Members are the vertices with dist[v] <= r (a ball from a BFS row).
  static VertexSet from_row_threshold(std::span<const std::int32_t> dist, std::int64_t r) {
    VertexSet s(static_cast<Vertex>(dist.size()));
    std::int64_t c = 0;
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v] >= 0 && dist[v] <= r) {
        s.words_[v >> 6] |= 1ull << (v & 63);
        ++c;
      }
    }
    s.count_ = c;
    return s;
  }

  Vertex universe() const { return n_; }

  bool contains(Vertex v) const { return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1ull; }

  void insert(Vertex v) {
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    std::uint64_t bit = 1ull << (v & 63);
    if (!(w & bit)) {
      w |= bit;
      if (count_ >= 0) ++count_;
    }
  }

  void erase(Vertex v) {
    std::uint64_t& w = words_[static_cast<std::size_t>(v) >> 6];
    std::uint64_t bit = 1ull << (v & 63);
    if (w & bit) {
      w &= ~bit;
      if (count_ >= 0) --count_;
    }
  }

  void intersect_with(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    count_ = -1;
  }

  std::int64_t count() const {
    if (count_ < 0) {
      std::int64_t c = 0;
      for (std::uint64_t w : words_) c += std::popcount(w);
      count_ = c;
    }
    return count_;
  }

  bool empty() const { return count() == 0; }

  // Lowest-index member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        int b = std::countr_zero(w);
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet& other) const { return n_ == other.n_ && words_ == other.words_; }

 private:
  static std::uint64_t last_word_mask(Vertex universe) {
    int rem = universe & 63;
    return rem == 0 ? ~0ull : (~0ull >> (64 - rem));
  }

  Vertex n_ = 0;
  std::vector<std::uint64_t> words_;
  mutable std::int64_t count_ = 0;  // -1 when stale
};

}  // namespace helly
