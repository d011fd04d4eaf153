// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "fill_common.hpp"
#include "vpower/simd/kernels.hpp"

namespace vpower::simd {
namespace {

void fill_weighted(std::span<const std::int64_t> weights, std::int64_t quota,
                   std::span<std::uint64_t> out) {
  if (weights.size() < 6) {
    scalar_kernels().fill_weighted(weights, quota, out);
    return;
  }
  const auto sums = detail::split_sums(weights);
  __m256i low[16];
  for (int g = 0; g < 16; ++g) {
    low[g] = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sums.low + 4 * g));
  }
  for (std::size_t h = 0; h < sums.high.size(); ++h) {
    // low >= quota - high  <=>  low > quota - high - 1
    const __m256i bound = _mm256_set1_epi64x(quota - sums.high[h] - 1);
    std::uint64_t word = 0;
    for (int g = 0; g < 16; ++g) {
      const __m256i hit = _mm256_cmpgt_epi64(low[g], bound);
      const auto lanes = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(hit)));
      word |= std::uint64_t{lanes} << (4 * g);
    }
    out[h] = word;
  }
}

void upward_closure(int n, std::span<std::uint64_t> words) {
  const std::size_t count = words_for(n);
  auto* base = reinterpret_cast<__m256i*>(words.data());
  for (int i = 0; i < n; ++i) {
    if (i < 6) {
      const unsigned shift = 1U << i;
      const __m256i pattern = _mm256_set1_epi64x(static_cast<long long>(detail::kLowPattern[i]));
      std::size_t h = 0;
      for (; h + 4 <= count; h += 4) {
        __m256i* p = reinterpret_cast<__m256i*>(words.data() + h);
        const __m256i w = _mm256_loadu_si256(p);
        const __m256i moved = _mm256_slli_epi64(_mm256_and_si256(w, pattern), static_cast<int>(shift));
        _mm256_storeu_si256(p, _mm256_or_si256(w, moved));
      }
      for (; h < count; ++h) words[h] |= (words[h] & detail::kLowPattern[i]) << shift;
    } else {
      const std::size_t d = std::size_t{1} << (i - 6);
      if (d < 4) {
        for (std::size_t h = 0; h < count; ++h) {
          if ((h & d) == 0) words[h | d] |= words[h];
        }
        continue;
      }
      for (std::size_t block = 0; block < count; block += 2 * d) {
        for (std::size_t k = 0; k < d; k += 4) {
          __m256i* lo = base + (block + k) / 4;
          __m256i* hi = base + (block + d + k) / 4;
          _mm256_storeu_si256(hi, _mm256_or_si256(_mm256_loadu_si256(hi), _mm256_loadu_si256(lo)));
        }
      }
    }
  }
}

// Per-64-bit-lane population count (nibble lookup + SAD).
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), nibble);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline std::uint64_t horizontal_sum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

std::uint64_t swing_count(int n, int player, std::span<const std::uint64_t> words) {
  const std::size_t count = words_for(n);
  const std::size_t d = player >= 6 ? std::size_t{1} << (player - 6) : 0;
  if (count < 4 || (player >= 6 && d < 4)) return scalar_kernels().swing_count(n, player, words);

  __m256i acc = _mm256_setzero_si256();
  if (player < 6) {
    const int shift = 1 << player;
    const __m256i pattern = _mm256_set1_epi64x(static_cast<long long>(detail::kLowPattern[player]));
    for (std::size_t h = 0; h < count; h += 4) {
      const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + h));
      const __m256i up = _mm256_srli_epi64(w, shift);
      const __m256i swing = _mm256_and_si256(_mm256_andnot_si256(w, up), pattern);
      acc = _mm256_add_epi64(acc, popcount_lanes(swing));
    }
  } else {
    for (std::size_t block = 0; block < count; block += 2 * d) {
      for (std::size_t k = 0; k < d; k += 4) {
        const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + block + k));
        const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words.data() + block + d + k));
        acc = _mm256_add_epi64(acc, popcount_lanes(_mm256_andnot_si256(lo, hi)));
      }
    }
  }
  return horizontal_sum(acc);
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet k{"avx2", &fill_weighted, &upward_closure, &swing_count};
  return &k;
}

}  // namespace vpower::simd
