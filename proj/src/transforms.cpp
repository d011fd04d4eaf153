#include <algorithm>
#include <numeric>

#include "vpower/game.hpp"

namespace vpower {
namespace {

// Keeps only the inclusion-minimal members, sorted.
std::vector<Coalition> minimize(std::vector<Coalition> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<Coalition> out;
  for (Coalition m : family) {
    const bool dominated = std::any_of(family.begin(), family.end(),
                                       [m](Coalition o) { return o != m && is_subset(o, m); });
    if (!dominated) out.push_back(m);
  }
  return out;
}

// Drops bit `p` and shifts higher bits down by one.
Coalition squeeze_out(Coalition s, PlayerId p) {
  const Coalition low = s & (bit(p) - 1);
  const Coalition high = (s >> (p + 1)) << p;
  return low | high;
}

ReducedGame remove_player(const SimpleVotingGame& game, PlayerId p) {
  const int n = game.players();
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) map[static_cast<std::size_t>(q)] = q < p ? q : (q == p ? -1 : q - 1);
  if (const auto* w = game.weighted()) {
    auto weights = w->weights;
    weights.erase(weights.begin() + p);
    return {SimpleVotingGame(WeightedRule{w->quota, std::move(weights)}), std::move(map)};
  }
  std::vector<Coalition> family;
  for (Coalition m : game.explicit_rule()->min_winning) family.push_back(squeeze_out(m, p));
  return {SimpleVotingGame(n - 1, ExplicitRule{minimize(std::move(family))}), std::move(map)};
}

}  // namespace

SimpleVotingGame donate(const SimpleVotingGame& game, PlayerId donor, PlayerId recipient) {
  require_player(game, donor);
  require_player(game, recipient);
  if (donor == recipient) return game;
  if (const auto* w = game.weighted()) {
    auto weights = w->weights;
    weights[static_cast<std::size_t>(recipient)] += weights[static_cast<std::size_t>(donor)];
    weights[static_cast<std::size_t>(donor)] = 0;
    return SimpleVotingGame(WeightedRule{w->quota, std::move(weights)});
  }
  // X wins after donation iff X with the donor's vote copied from the
  // recipient won before, so each minimal M maps to M - donor (+ recipient).
  std::vector<Coalition> family;
  for (Coalition m : game.explicit_rule()->min_winning) {
    family.push_back(contains(m, donor) ? ((m & ~bit(donor)) | bit(recipient)) : m);
  }
  return SimpleVotingGame(game.players(), ExplicitRule{minimize(std::move(family))});
}

BlocGame form_bloc(const SimpleVotingGame& game, const BlocSpec& bloc) {
  if (bloc.members == 0) throw VotingError(ErrorCode::EmptyBloc, "bloc has no members");
  if (!is_subset(bloc.members, game.all())) {
    throw VotingError(ErrorCode::InvalidPlayer, "bloc names a player outside the game");
  }
  if (!contains(bloc.members, bloc.lead)) {
    throw VotingError(ErrorCode::InvalidPlayer, "bloc lead is not a member");
  }
  SimpleVotingGame current = game;
  for (PlayerId donor : members(bloc.members & ~bit(bloc.lead))) {
    current = donate(current, donor, bloc.lead);
  }
  // Delete donors from the highest index down so earlier indices stay put.
  const auto donors = members(bloc.members & ~bit(bloc.lead));
  for (auto it = donors.rbegin(); it != donors.rend(); ++it) current = remove_player(current, *it).game;

  std::vector<int> map(static_cast<std::size_t>(game.players()), -1);
  int next = 0;
  for (int p = 0; p < game.players(); ++p) {
    if (p == bloc.lead || !contains(bloc.members, p)) map[static_cast<std::size_t>(p)] = next++;
  }
  const PlayerId bloc_player = map[static_cast<std::size_t>(bloc.lead)];
  return {std::move(current), std::move(map), bloc_player};
}

SimpleVotingGame add_yes_blocker(const SimpleVotingGame& game) {
  const int n = game.players();
  if (n + 1 > kMaxRepresentablePlayers) throw VotingError(ErrorCode::TooManyPlayers, "game is full");
  if (const auto* w = game.weighted()) {
    // The newcomer outweighs everyone else together, and the quota rises by
    // its weight, so a coalition wins iff it has the newcomer and an old win.
    const std::int64_t total = std::accumulate(w->weights.begin(), w->weights.end(), std::int64_t{0});
    auto weights = w->weights;
    weights.push_back(total + 1);
    return SimpleVotingGame(WeightedRule{w->quota + total + 1, std::move(weights)});
  }
  std::vector<Coalition> family;
  for (Coalition m : game.explicit_rule()->min_winning) family.push_back(m | bit(n));
  return SimpleVotingGame(n + 1, ExplicitRule{std::move(family)});
}

SimpleVotingGame add_no_blocker(const SimpleVotingGame& game) {
  const int n = game.players();
  if (n + 1 > kMaxRepresentablePlayers) throw VotingError(ErrorCode::TooManyPlayers, "game is full");
  if (const auto* w = game.weighted()) {
    auto weights = w->weights;
    weights.push_back(w->quota);
    return SimpleVotingGame(WeightedRule{w->quota, std::move(weights)});
  }
  auto family = game.explicit_rule()->min_winning;
  family.push_back(bit(n));
  std::sort(family.begin(), family.end());
  return SimpleVotingGame(n + 1, ExplicitRule{std::move(family)});
}

ReducedGame delete_dummy(const SimpleVotingGame& game, PlayerId p, const Limits& limits) {
  if (!is_dummy(game, p, limits)) {
    throw VotingError(ErrorCode::NotADummy, "player " + std::to_string(p) + " is not a dummy");
  }
  if (game.players() == 1) throw VotingError(ErrorCode::TrivialGame, "cannot delete the only player");
  return remove_player(game, p);
}

Coalition permute_coalition(Coalition s, const std::vector<int>& perm) {
  Coalition out = 0;
  for (; s != 0; s &= s - 1) out |= bit(perm[static_cast<std::size_t>(std::countr_zero(s))]);
  return out;
}

SimpleVotingGame permute_players(const SimpleVotingGame& game, const std::vector<int>& perm) {
  const int n = game.players();
  if (static_cast<int>(perm.size()) != n) {
    throw VotingError(ErrorCode::NotAPermutation, "permutation has the wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw VotingError(ErrorCode::NotAPermutation, "not a permutation of the players");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  if (const auto* w = game.weighted()) {
    std::vector<std::int64_t> weights(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
      weights[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = w->weights[static_cast<std::size_t>(p)];
    }
    return SimpleVotingGame(WeightedRule{w->quota, std::move(weights)});
  }
  std::vector<Coalition> family;
  for (Coalition m : game.explicit_rule()->min_winning) family.push_back(permute_coalition(m, perm));
  std::sort(family.begin(), family.end());
  return SimpleVotingGame(n, ExplicitRule{std::move(family)});
}

}  // namespace vpower
