#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace helly {

using Vertex = std::int32_t;
using Cost = std::uint64_t;

// Wide accumulator for cost-weighted distances: holds n * max_cost * n for
// any n < 2^32 and 64-bit costs, so weighted sums never wrap.
using Value = unsigned __int128;

inline std::string to_string(Value v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

// Input that violates a documented precondition (bad file, bad parameter,
// graph too large for an exact procedure).  CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A run-time contract the algorithms rely on failed: a gate is missing (the
// input is not actually Helly), sampling failed twice, or a step budget was
// exhausted.  CLI maps this to exit code 2.
class algorithm_error : public std::runtime_error {
 public:
  explicit algorithm_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helly
