#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>

#include "oracle.hpp"
#include "vpower/simd/kernels.hpp"
#include "vpower/win_table.hpp"

using namespace vpower;

namespace {

std::vector<const simd::KernelSet*> variants() {
  std::vector<const simd::KernelSet*> out{&simd::scalar_kernels()};
  if (simd::avx2_kernels() != nullptr && simd::cpu_has_avx2()) out.push_back(simd::avx2_kernels());
  return out;
}

}  // namespace

TEST_CASE("fill_weighted variants agree with the direct weight sum") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto g = oracle::random_weighted(rng, n, trial % 2 == 0 ? 9 : 1000);
    const auto& w = *g.weighted();
    for (const auto* k : variants()) {
      std::vector<std::uint64_t> words(simd::words_for(n), 0);
      k->fill_weighted(w.weights, w.quota, words);
      for (Coalition s = 0; s < (Coalition{1} << n); ++s) {
        REQUIRE_MESSAGE((((words[s >> 6] >> (s & 63)) & 1U) != 0) == oracle::wins(g, s), k->name);
      }
    }
  }
}

TEST_CASE("upward_closure variants agree") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 13);
    std::vector<std::uint64_t> seed(simd::words_for(n), 0);
    const Coalition size = Coalition{1} << n;
    for (int k = 0; k < 3; ++k) {
      const Coalition s = rng() % size;
      seed[s >> 6] |= std::uint64_t{1} << (s & 63);
    }
    // Reference: S is set iff some seeded T is a subset of S.
    std::vector<Coalition> seeded;
    for (Coalition s = 0; s < size; ++s) {
      if ((seed[s >> 6] >> (s & 63)) & 1U) seeded.push_back(s);
    }
    for (const auto* k : variants()) {
      auto words = seed;
      k->upward_closure(n, words);
      for (Coalition s = 0; s < size; ++s) {
        bool expected = false;
        for (Coalition t : seeded) expected = expected || (t & ~s) == 0;
        REQUIRE_MESSAGE((((words[s >> 6] >> (s & 63)) & 1U) != 0) == expected, k->name);
      }
    }
  }
}

TEST_CASE("swing_count variants agree with brute force") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const auto g = oracle::random_weighted(rng, n, 12);
    std::vector<std::uint64_t> words(simd::words_for(n), 0);
    simd::scalar_kernels().fill_weighted(g.weighted()->weights, g.weighted()->quota, words);
    for (int p = 0; p < n; ++p) {
      const auto expected = oracle::swings(g, p);
      for (const auto* k : variants()) REQUIRE_MESSAGE(k->swing_count(n, p, words) == expected, k->name);
    }
  }
}

TEST_CASE("dispatch honours VPOWER_KERNELS") {
  const char* forced = std::getenv("VPOWER_KERNELS");
  const std::string active = simd::active_kernels().name;
  if (forced != nullptr && std::string(forced) == "scalar") {
    CHECK(active == "scalar");
  } else if (simd::avx2_kernels() != nullptr && simd::cpu_has_avx2()) {
    CHECK(active == "avx2");
  } else {
    CHECK(active == "scalar");
  }
}
