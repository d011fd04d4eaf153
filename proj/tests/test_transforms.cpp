#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "vpower/game.hpp"
#include "vpower/search.hpp"

using namespace vpower;

namespace {

// Donation by definition: X wins afterwards iff X with the donor's vote
// replaced by the recipient's vote won before.
bool donated_wins(const SimpleVotingGame& g, PlayerId donor, PlayerId recipient, Coalition x) {
  const Coalition copied = contains(x, recipient) ? (x | bit(donor)) : (x & ~bit(donor));
  return oracle::wins(g, copied);
}

std::vector<SimpleVotingGame> sample_games() {
  std::vector<SimpleVotingGame> out;
  for (int n = 2; n <= 4; ++n) {
    for (auto& g : enumerate_games(ExhaustiveMonotone{n})) out.push_back(g);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) out.push_back(oracle::random_weighted(rng, 2 + static_cast<int>(rng() % 5), 7));
  return out;
}

}  // namespace

TEST_CASE("donation follows the four membership rules") {
  for (const auto& g : sample_games()) {
    const int n = g.players();
    for (PlayerId j = 0; j < n; ++j) {
      for (PlayerId i = 0; i < n; ++i) {
        if (i == j) continue;
        const auto d = donate(g, j, i);
        for (Coalition x = 0; x <= g.all(); ++x) {
          REQUIRE(oracle::wins(d, x) == donated_wins(g, j, i, x));
        }
        // The donor ends up a dummy.
        CHECK(contains(dummies(d), j));
      }
    }
  }
}

TEST_CASE("bloc formation is independent of donation order") {
  for (const auto& g : sample_games()) {
    const int n = g.players();
    if (n < 3) continue;
    // Donate 1 then 2 into 0, and 2 then 1 into 0.
    const auto a = donate(donate(g, 1, 0), 2, 0);
    const auto b = donate(donate(g, 2, 0), 1, 0);
    CHECK(same_winning_family(a, b));
  }
}

TEST_CASE("form_bloc deletes donors and maps indices") {
  const auto g = make_weighted(2, {1, 1, 2, 2, 2});
  const auto formed = form_bloc(g, {0b00011, 0});
  CHECK(formed.game.players() == 4);
  CHECK(formed.bloc_player == 0);
  CHECK(formed.index_map == std::vector<int>{0, -1, 1, 2, 3});
  CHECK(formed.game.weighted()->weights == std::vector<std::int64_t>{2, 2, 2, 2});

  const auto led_by_second = form_bloc(g, {0b00011, 1});
  CHECK(led_by_second.bloc_player == 0);
  CHECK(led_by_second.index_map == std::vector<int>{-1, 0, 1, 2, 3});

  const auto whole = form_bloc(make_unanimity(3), {0b111, 0});
  CHECK(whole.game.players() == 1);
  CHECK(whole.game.is_winning(1));

  CHECK_THROWS_AS(form_bloc(g, {0, 0}), VotingError);
  CHECK_THROWS_AS(form_bloc(g, {0b11, 3}), VotingError);
}

TEST_CASE("bloc game agrees with donations on the surviving players") {
  for (const auto& g : sample_games()) {
    const int n = g.players();
    for (const auto& bloc : search_blocs(n, n)) {
      const auto formed = form_bloc(g, bloc);
      SimpleVotingGame donated = g;
      for (PlayerId p : members(bloc.members)) {
        if (p != bloc.lead) donated = donate(donated, p, bloc.lead);
      }
      for (Coalition x = 0; x <= formed.game.all(); ++x) {
        Coalition lifted = 0;
        for (PlayerId p = 0; p < n; ++p) {
          const int q = formed.index_map[static_cast<std::size_t>(p)];
          if (q >= 0 && contains(x, q)) lifted |= bit(p);
        }
        REQUIRE(formed.game.is_winning(x) == oracle::wins(donated, lifted));
      }
    }
  }
}

TEST_CASE("added blockers") {
  const auto g = make_weighted(3, {2, 1, 1});
  const auto gy = add_yes_blocker(g);
  CHECK(gy.weighted()->quota == 8);
  CHECK(gy.weighted()->weights == std::vector<std::int64_t>{2, 1, 1, 5});
  const auto gn = add_no_blocker(g);
  CHECK(contains(no_blockers(gn), 3));

  for (const auto& game : sample_games()) {
    const int n = game.players();
    const auto y = add_yes_blocker(game);
    const auto no = add_no_blocker(game);
    CHECK(contains(yes_blockers(y), n));
    CHECK(contains(no_blockers(no), n));
    for (Coalition x = 0; x <= game.all(); ++x) {
      REQUIRE(oracle::wins(y, x | bit(n)) == oracle::wins(game, x));
      REQUIRE_FALSE(oracle::wins(y, x));
      REQUIRE(oracle::wins(no, x) == oracle::wins(game, x));
      REQUIRE(oracle::wins(no, x | bit(n)));
    }
    const auto ey = add_yes_blocker(make_explicit(n, game.minimal_winning()));
    CHECK(same_winning_family(ey, y));
    const auto en = add_no_blocker(make_explicit(n, game.minimal_winning()));
    CHECK(same_winning_family(en, no));
  }
}

TEST_CASE("dummy deletion") {
  const auto g = make_weighted(3, {3, 1, 1});
  const auto reduced = delete_dummy(g, 1);
  CHECK(reduced.game.players() == 2);
  CHECK(reduced.index_map == std::vector<int>{0, -1, 1});
  CHECK_THROWS_AS(delete_dummy(make_unanimity(3), 0), VotingError);
  CHECK_THROWS_AS(delete_dummy(make_dictator(1, 0), 0), VotingError);
}

TEST_CASE("permutations act as a group") {
  const auto perms = search_permutations(4);
  CHECK(perms.size() == 24);
  for (const auto& g : enumerate_games(ExhaustiveMonotone{4})) {
    for (std::size_t a = 0; a < perms.size(); a += 5) {
      for (std::size_t b = 0; b < perms.size(); b += 7) {
        std::vector<int> composed(4);
        for (int p = 0; p < 4; ++p) composed[static_cast<std::size_t>(p)] = perms[b][static_cast<std::size_t>(perms[a][static_cast<std::size_t>(p)])];
        const auto twice = permute_players(permute_players(g, perms[a]), perms[b]);
        REQUIRE(same_winning_family(twice, permute_players(g, composed)));
      }
    }
    const auto& p = perms[9];
    const auto moved = permute_players(g, p);
    for (Coalition x = 0; x <= g.all(); ++x) REQUIRE(moved.is_winning(permute_coalition(x, p)) == g.is_winning(x));
  }
  CHECK_THROWS_AS(permute_players(make_unanimity(3), {0, 0, 1}), VotingError);
}

TEST_CASE("two-member donation rules hold up to ten players") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 7 + trial % 4;
    const auto g = oracle::random_weighted(rng, n, 9);
    const PlayerId i = static_cast<PlayerId>(rng() % n);
    PlayerId j = static_cast<PlayerId>(rng() % n);
    if (j == i) j = (i + 1) % n;
    const auto d = donate(g, j, i);
    const auto e = donate(make_explicit(n, g.minimal_winning()), j, i);
    for (Coalition x = 0; x <= g.all(); ++x) {
      REQUIRE(oracle::wins(d, x) == donated_wins(g, j, i, x));
      REQUIRE(oracle::wins(e, x) == oracle::wins(d, x));
    }
  }
}
