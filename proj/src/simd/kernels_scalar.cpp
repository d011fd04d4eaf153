#include <bit>

#include "fill_common.hpp"
#include "vpower/simd/kernels.hpp"

namespace vpower::simd {
namespace {

void fill_weighted(std::span<const std::int64_t> weights, std::int64_t quota,
                   std::span<std::uint64_t> out) {
  const auto sums = detail::split_sums(weights);
  for (std::size_t h = 0; h < sums.high.size(); ++h) {
    const std::int64_t threshold = quota - sums.high[h];
    std::uint64_t word = 0;
    for (int b = 0; b < sums.low_count; ++b) {
      if (sums.low[b] >= threshold) word |= std::uint64_t{1} << b;
    }
    out[h] = word;
  }
}

void upward_closure(int n, std::span<std::uint64_t> words) {
  const std::size_t count = words_for(n);
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      for (std::size_t h = 0; h < count; ++h) {
        words[h] |= (words[h] & detail::kLowPattern[i]) << shift;
      }
    } else {
      const std::size_t d = std::size_t{1} << (i - 6);
      for (std::size_t h = 0; h < count; ++h) {
        if ((h & d) == 0) words[h | d] |= words[h];
      }
    }
  }
}

std::uint64_t swing_count(int n, int player, std::span<const std::uint64_t> words) {
  const std::size_t count = words_for(n);
  std::uint64_t total = 0;
  if (player < 6) {
    const unsigned shift = 1U << player;
    for (std::size_t h = 0; h < count; ++h) {
      const std::uint64_t w = words[h];
      total += std::popcount((w >> shift) & ~w & detail::kLowPattern[player]);
    }
  } else {
    const std::size_t d = std::size_t{1} << (player - 6);
    for (std::size_t h = 0; h < count; ++h) {
      if ((h & d) == 0) total += std::popcount(words[h | d] & ~words[h]);
    }
  }
  return total;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet k{"scalar", &fill_weighted, &upward_closure, &swing_count};
  return k;
}

}  // namespace vpower::simd
