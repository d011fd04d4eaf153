#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vpower/game.hpp"
#include "vpower/measures.hpp"
#include "vpower/win_table.hpp"

using namespace vpower;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const VotingError& e) {
    return e.code();
  }
  FAIL("no VotingError thrown");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("weighted winning test") {
  const auto g = make_weighted(3, {2, 1, 1});
  CHECK(g.players() == 3);
  CHECK(g.is_winning(0b011));
  CHECK(g.is_winning(0b101));
  CHECK_FALSE(g.is_winning(0b110));
  CHECK(g.minimal_winning() == std::vector<Coalition>{0b011, 0b101});
}

TEST_CASE("unanimity and dictator factories") {
  const auto u = make_unanimity(3);
  CHECK(u.minimal_winning() == std::vector<Coalition>{0b111});
  CHECK(yes_blockers(u) == 0b111);
  CHECK(no_blockers(u) == 0);
  const auto d = make_dictator(4, 2);
  CHECK(yes_blockers(d) == bit(2));
  CHECK(no_blockers(d) == bit(2));
  CHECK(dummies(d) == 0b1011);
}

TEST_CASE("validation rejects bad games") {
  CHECK(code_of([] { make_weighted(0, {1, 1}); }) == ErrorCode::TrivialGame);
  CHECK(code_of([] { make_weighted(5, {1, 1}); }) == ErrorCode::TrivialGame);
  CHECK(code_of([] { make_weighted(1, {1, -1}); }) == ErrorCode::InvalidWeights);
  CHECK(code_of([] { make_explicit(3, {}); }) == ErrorCode::TrivialGame);
  CHECK(code_of([] { make_explicit(3, {0}); }) == ErrorCode::TrivialGame);
  CHECK(code_of([] { make_explicit(3, {0b011, 0b111}); }) == ErrorCode::NotAntichain);
  CHECK(code_of([] { make_explicit(2, {0b100}); }) == ErrorCode::InvalidCoalition);
  CHECK(code_of([] { make_unanimity(0); }) == ErrorCode::TooManyPlayers);
}

TEST_CASE("explicit families are normalized") {
  const auto g = make_explicit(3, {0b110, 0b011, 0b110});
  CHECK(g.explicit_rule()->min_winning == std::vector<Coalition>{0b011, 0b110});
}

TEST_CASE("blockers agree with a brute-force definition") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto g = oracle::random_weighted(rng, n, 6);
    Coalition ybk = 0, nbk = 0;
    for (int p = 0; p < n; ++p) {
      bool in_every_winner = true;
      for (Coalition s = 0; s < (Coalition{1} << n); ++s) {
        if (oracle::wins(g, s) && !contains(s, p)) in_every_winner = false;
      }
      if (in_every_winner) ybk |= bit(p);
      if (oracle::wins(g, bit(p))) nbk |= bit(p);
    }
    CHECK(yes_blockers(g) == ybk);
    CHECK(no_blockers(g) == nbk);
    Coalition dum = 0;
    for (int p = 0; p < n; ++p) {
      if (oracle::swings(g, p) == 0) dum |= bit(p);
    }
    CHECK(dummies(g) == dum);
    const auto as_explicit = make_explicit(n, g.minimal_winning());
    CHECK(dummies(as_explicit) == dum);
    CHECK(yes_blockers(as_explicit) == ybk);
    CHECK(no_blockers(as_explicit) == nbk);
    CHECK(same_winning_family(g, as_explicit));
  }
}

TEST_CASE("minimal sizes") {
  const auto g = make_weighted(2, {1, 1, 2, 2, 2});
  CHECK(min_winning_size(g) == 1);
  CHECK(min_blocking_size(g) == 4);
  const auto u = make_unanimity(5);
  CHECK(min_winning_size(u) == 5);
  CHECK(min_blocking_size(u) == 1);
  const auto e = make_explicit(4, {0b0011, 0b1100});
  CHECK(min_winning_size(e) == 2);
  CHECK(min_blocking_size(e) == 2);
}

TEST_CASE("win table matches the rule") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto g = oracle::random_weighted(rng, n, 9);
    const auto table = WinTable::build(g);
    const auto ex = WinTable::build(make_explicit(n, g.minimal_winning()));
    for (Coalition s = 0; s < table.size(); ++s) {
      REQUIRE(table[s] == oracle::wins(g, s));
      REQUIRE(ex[s] == table[s]);
    }
    for (int p = 0; p < n; ++p) CHECK(table.swings(p) == oracle::swings(g, p));
  }
}

TEST_CASE("limits are enforced") {
  Limits small;
  small.max_players = 4;
  CHECK(code_of([&] { WinTable::build(make_unanimity(5), small); }) == ErrorCode::TooManyPlayers);
  Limits tight;
  tight.max_weight_sum = 10;
  CHECK(code_of([&] { pb_fast(make_weighted(3, {5, 5, 5}), tight); }) == ErrorCode::WeightSumTooLarge);
}

TEST_CASE("monotonicity and blockers on larger random games") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 8 + trial % 5;
    const auto g = oracle::random_weighted(rng, n, 20);
    const auto table = WinTable::build(g);
    Coalition nbk = 0;
    for (Coalition s = 0; s < table.size(); ++s) {
      for (int j = 0; j < n; ++j) REQUIRE((!table[s] || table[s | bit(j)]));
    }
    for (int j = 0; j < n; ++j) {
      bool forces = true;
      for (Coalition s = 0; s < table.size() && forces; ++s) forces = table[s | bit(j)];
      if (forces) nbk |= bit(j);
    }
    Coalition ybk = g.all();
    for (Coalition m : g.minimal_winning()) ybk &= m;
    CHECK(no_blockers(g) == nbk);
    CHECK(yes_blockers(g) == ybk);
  }
}
