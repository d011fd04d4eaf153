#pragma once

// Bit-parallel kernels over winning tables. A winning table for n players is
// a bitset of 2^n bits packed into 64-bit words; bit m is set iff coalition m
// wins. Tables with n < 6 occupy the low 2^n bits of a single word.
//
// Each kernel has a scalar reference implementation and, where the target
// supports it, an AVX2 variant. `active_kernels()` picks one at runtime; the
// test suite checks every compiled variant against the scalar one.

#include <cstdint>
#include <span>

namespace vpower::simd {

struct KernelSet {
  const char* name;

  /// out[m] = sum_{p in m} weights[p] >= quota, for all m < 2^n where
  /// n = weights.size(). `out` must hold words_for(n) words.
  void (*fill_weighted)(std::span<const std::int64_t> weights, std::int64_t quota,
                        std::span<std::uint64_t> out);

  /// In-place superset closure: afterwards bit m is set iff some subset of m
  /// was set before.
  void (*upward_closure)(int n, std::span<std::uint64_t> words);

  /// Number of coalitions m without `player` such that m loses and
  /// m + player wins.
  std::uint64_t (*swing_count)(int n, int player, std::span<const std::uint64_t> words);
};

inline constexpr std::size_t words_for(int n) {
  return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
}

const KernelSet& scalar_kernels();
/// Null when the AVX2 variant was not compiled in.
const KernelSet* avx2_kernels();
bool cpu_has_avx2();

/// Best variant for this CPU. The environment variable VPOWER_KERNELS=scalar
/// forces the scalar reference.
const KernelSet& active_kernels();

namespace detail {
// Bits whose position has bit `i` clear, i < 6.
inline constexpr std::uint64_t kLowPattern[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};
}  // namespace detail

}  // namespace vpower::simd
