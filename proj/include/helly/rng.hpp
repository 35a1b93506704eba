#pragma once

#include <cstdint>
#include <random>

#include "helly/types.hpp"

namespace helly {

// Deterministic RNG wrapper.  std::mt19937_64 output is specified by the
// standard, but the std distributions are not; the bounded draw below is
// fixed-point multiply rejection-free mapping, so the same seed produces the
// same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform draw from [0, n).  pre: n >= 1.
  std::uint64_t bounded(std::uint64_t n) {
    Value prod = static_cast<Value>(next()) * static_cast<Value>(n);
    return static_cast<std::uint64_t>(prod >> 64);
  }

  Vertex vertex(Vertex n) { return static_cast<Vertex>(bounded(static_cast<std::uint64_t>(n))); }

  // True with probability p (p in [0, 1]).
  bool bernoulli(double p) {
    constexpr double kInv = 1.0 / 9007199254740992.0;  // 2^-53
    return static_cast<double>(next() >> 11) * kInv < p;
  }

  // Derived seed for an independent stream (restart paths, sub-procedures).
  std::uint64_t fork() { return next() ^ 0x9e3779b97f4a7c15ull; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace helly
