#include <doctest.h>

#include <chrono>
#include <random>

#include "oracle.hpp"
#include "vpower/measures.hpp"
#include "vpower/search.hpp"

using namespace vpower;

TEST_CASE("fast paths equal enumeration on random weighted games") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto g = oracle::random_weighted(rng, n, trial % 3 == 0 ? 50 : 6);
    const auto a = pb(g), b = pb_fast(g);
    const auto c = ss(g), d = ss_fast(g);
    for (PlayerId i = 0; i < n; ++i) {
      REQUIRE(a.total(i) == b.total(i));
      REQUIRE(a.yes(i) == b.yes(i));
      REQUIRE(c.total(i) == d.total(i));
      REQUIRE(c.yes(i) == d.yes(i));
      REQUIRE(c.no(i) == d.no(i));
    }
  }
}

TEST_CASE("fast paths on the corpus") {
  for (const auto& entry : reference_corpus()) {
    if (entry.game.weighted() == nullptr) continue;
    CHECK(pb_fast(entry.game).totals() == pb(entry.game).totals());
    CHECK(ss_fast(entry.game).totals() == ss(entry.game).totals());
  }
}

TEST_CASE("fast paths scale past enumeration") {
  const auto start = std::chrono::steady_clock::now();
  const auto r = pb_fast(make_weighted(20, std::vector<std::int64_t>(20, 1)));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.total(0) == inverse_power_of_two(19));
  CHECK(seconds < 1.0);
  const auto big = ss_fast(make_weighted(31, std::vector<std::int64_t>(40, 1)));
  CHECK(big.total(0) == Rational(1) / Rational(40));
  CHECK(big.sum() == Rational(1));
}

TEST_CASE("fast paths need a weighted rule") {
  CHECK_THROWS_AS(pb_fast(make_explicit(2, {0b11})), VotingError);
}
