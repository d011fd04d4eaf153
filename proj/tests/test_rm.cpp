#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vpower/measures.hpp"
#include "vpower/search.hpp"

using namespace vpower;

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

}  // namespace

TEST_CASE("RM on the five-player bloc example") {
  const auto g = make_weighted(2, {1, 1, 2, 2, 2});
  const auto r = rm(g);
  CHECK(r.total(0) == frac(41, 320));
  CHECK(r.total(1) == frac(41, 320));
  const auto formed = form_bloc(g, {0b11, 0});
  CHECK(rm(formed.game).total(formed.bloc_player) == frac(19, 64));
}

TEST_CASE("loyal children") {
  const auto g = make_weighted(2, {1, 1, 2, 2, 2});
  // {3,4} wins; dropping either leaves a single weight-2 voter, still winning.
  const auto kids = loyal_children(g, {0b01100, 5});
  CHECK(kids.size() == 2);
  // {1,2,3} wins; every single drop still wins.
  CHECK(loyal_children(g, {0b00111, 5}).size() == 3);
  // The empty division loses and only weight-1 additions keep it losing.
  CHECK(loyal_children(g, {0, 5}).size() == 2);
}

TEST_CASE("memoized table equals the definition and the path oracle") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_games(ExhaustiveMonotone{n})) {
      const auto table = EfficacyTable::compute(g);
      for (Coalition s = 0; s <= g.all(); ++s) {
        for (PlayerId i = 0; i < n; ++i) {
          const auto& a = table.at(i, s);
          REQUIRE(a == oracle::rm_alpha(g, i, s));
          REQUIRE(a == rm_path_oracle(g, i, {s, n}));
          REQUIRE(a >= Rational(0));
          REQUIRE(a <= Rational(1));
        }
      }
    }
  }
}

TEST_CASE("RM report decomposes and has decisive players at 1") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_weighted(rng, 2 + static_cast<int>(rng() % 5), 6);
    const auto table = EfficacyTable::compute(g);
    const auto r = rm(table);
    for (PlayerId i = 0; i < g.players(); ++i) {
      CHECK(r.yes(i) + r.no(i) == r.total(i));
      for (Coalition s = 0; s <= g.all(); ++s) {
        const Division d{s, g.players()};
        if (is_decisive(g, i, d)) REQUIRE(table.at(i, s) == Rational(1));
        if (!is_successful(g, i, d)) REQUIRE(table.at(i, s).is_zero());
        REQUIRE(table.yes_efficacy(i, s) + table.no_efficacy(i, s) == table.at(i, s));
      }
      // rm_efficacy is the same table lookup.
      CHECK(rm_efficacy(g, i, {g.all(), g.players()}) == table.at(i, g.all()));
    }
  }
}

TEST_CASE("RM is not strategy symmetric") {
  const auto r = rm(make_weighted(2, {1, 1, 2, 2, 2}));
  CHECK(r.yes(0) != r.no(0));
  CHECK(power_split(r)[0].yes == r.yes(0));
}

TEST_CASE("RM refuses games above its ceiling") {
  Limits limits;
  limits.rm_max_players = 4;
  CHECK_THROWS_AS(rm(make_unanimity(5), limits), VotingError);
  CHECK_THROWS_AS(rm_path_oracle(make_unanimity(9), 0, {0, 9}), VotingError);
}

TEST_CASE("efficacy identities under added blockers") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate_games(ExhaustiveMonotone{n})) {
      const auto base = EfficacyTable::compute(g);
      const auto y = EfficacyTable::compute(add_yes_blocker(g));
      const auto no = EfficacyTable::compute(add_no_blocker(g));
      const Coalition blocker = bit(n);
      for (Coalition s = 0; s <= g.all(); ++s) {
        for (PlayerId i = 0; i < n; ++i) {
          REQUIRE(y.yes_efficacy(i, s | blocker) == base.yes_efficacy(i, s));
          REQUIRE(y.yes_efficacy(i, s).is_zero());
          REQUIRE(no.no_efficacy(i, s) == base.no_efficacy(i, s));
          REQUIRE(no.no_efficacy(i, s | blocker).is_zero());
        }
      }
      const auto r = rm(base);
      for (PlayerId i = 0; i < n; ++i) {
        CHECK(r.total(i) >= Rational(0));
        CHECK(r.total(i) <= Rational(1));
      }
    }
  }
}
