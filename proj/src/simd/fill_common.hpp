#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace vpower::simd::detail {

// Weight sums of the low min(n, 6) players for every low pattern, and of the
// remaining players for every word index.
struct SplitSums {
  std::int64_t low[64] = {};
  int low_count = 1;
  std::vector<std::int64_t> high;
};

inline SplitSums split_sums(std::span<const std::int64_t> weights) {
  SplitSums s;
  const int n = static_cast<int>(weights.size());
  const int low_bits = n < 6 ? n : 6;
  s.low_count = 1 << low_bits;
  for (int m = 1; m < s.low_count; ++m) {
    s.low[m] = s.low[m & (m - 1)] + weights[std::countr_zero(static_cast<unsigned>(m))];
  }
  const std::size_t high_count = n > 6 ? (std::size_t{1} << (n - 6)) : 1;
  s.high.assign(high_count, 0);
  for (std::size_t h = 1; h < high_count; ++h) {
    s.high[h] = s.high[h & (h - 1)] + weights[6 + std::countr_zero(h)];
  }
  return s;
}

}  // namespace vpower::simd::detail
