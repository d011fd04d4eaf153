#include "vpower/game.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "vpower/win_table.hpp"

namespace vpower {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TrivialGame: return "TrivialGame";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::InvalidCoalition: return "InvalidCoalition";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::InvalidPlayer: return "InvalidPlayer";
    case ErrorCode::EmptyBloc: return "EmptyBloc";
    case ErrorCode::NotADummy: return "NotADummy";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::TooManyPlayers: return "TooManyPlayers";
    case ErrorCode::NotWeighted: return "NotWeighted";
    case ErrorCode::WeightSumTooLarge: return "WeightSumTooLarge";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

SimpleVotingGame::SimpleVotingGame(WeightedRule rule)
    : n_(static_cast<int>(rule.weights.size())), rule_(std::move(rule)) {}

SimpleVotingGame::SimpleVotingGame(int n, ExplicitRule rule) : n_(n), rule_(std::move(rule)) {}

bool SimpleVotingGame::is_winning(Coalition s) const {
  if (const auto* w = weighted()) {
    std::int64_t sum = 0;
    for (Coalition rest = s & all(); rest != 0; rest &= rest - 1) {
      sum += w->weights[std::countr_zero(rest)];
    }
    return sum >= w->quota;
  }
  const auto& family = std::get<ExplicitRule>(rule_).min_winning;
  return std::any_of(family.begin(), family.end(), [s](Coalition m) { return is_subset(m, s); });
}

std::vector<Coalition> SimpleVotingGame::minimal_winning(const Limits& limits) const {
  if (const auto* e = explicit_rule()) return e->min_winning;
  return WinTable::build(*this, limits).minimal_winning();
}

namespace {

std::int64_t checked_total(const std::vector<std::int64_t>& weights) {
  // Leaves headroom for add_yes_blocker, which appends total + 1.
  constexpr std::int64_t kCap = std::numeric_limits<std::int64_t>::max() / 4;
  std::int64_t total = 0;
  for (auto w : weights) {
    if (w < 0) throw VotingError(ErrorCode::InvalidWeights, "negative weight");
    if (w > kCap - total) throw VotingError(ErrorCode::InvalidWeights, "weight sum overflows");
    total += w;
  }
  return total;
}

}  // namespace

std::optional<VotingError> validation_error(const SimpleVotingGame& game) {
  const int n = game.players();
  if (n < 1 || n > kMaxRepresentablePlayers) {
    return VotingError(ErrorCode::TooManyPlayers, "player count must be in 1.." +
                                                      std::to_string(kMaxRepresentablePlayers));
  }
  if (const auto* w = game.weighted()) {
    std::int64_t total = 0;
    try {
      total = checked_total(w->weights);
    } catch (const VotingError& e) {
      return e;
    }
    if (w->quota <= 0) return VotingError(ErrorCode::TrivialGame, "quota <= 0: the empty coalition wins");
    if (w->quota > total) return VotingError(ErrorCode::TrivialGame, "quota exceeds total weight: no coalition wins");
    return std::nullopt;
  }
  const auto& family = game.explicit_rule()->min_winning;
  if (family.empty()) return VotingError(ErrorCode::TrivialGame, "no winning coalitions");
  for (Coalition m : family) {
    if (m == 0) return VotingError(ErrorCode::TrivialGame, "the empty coalition wins");
    if (!is_subset(m, game.all())) {
      return VotingError(ErrorCode::InvalidCoalition, "coalition names a player outside the game");
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = 0; b < family.size(); ++b) {
      if (a != b && is_subset(family[a], family[b])) {
        return VotingError(ErrorCode::NotAntichain, "minimal winning family has comparable members");
      }
    }
  }
  return std::nullopt;
}

void validate(const SimpleVotingGame& game) {
  if (auto err = validation_error(game)) throw *err;
}

void require_player(const SimpleVotingGame& game, PlayerId p) {
  if (p < 0 || p >= game.players()) {
    throw VotingError(ErrorCode::InvalidPlayer, "player " + std::to_string(p) + " not in game");
  }
}

void require_enumerable(int n, const Limits& limits) {
  if (n > limits.max_players) {
    throw VotingError(ErrorCode::TooManyPlayers,
                      std::to_string(n) + " players exceeds the enumeration ceiling of " +
                          std::to_string(limits.max_players));
  }
}

SimpleVotingGame make_weighted(std::int64_t quota, std::vector<std::int64_t> weights) {
  SimpleVotingGame g(WeightedRule{quota, std::move(weights)});
  validate(g);
  return g;
}

SimpleVotingGame make_explicit(int n, std::vector<Coalition> min_winning) {
  std::sort(min_winning.begin(), min_winning.end());
  min_winning.erase(std::unique(min_winning.begin(), min_winning.end()), min_winning.end());
  SimpleVotingGame g(n, ExplicitRule{std::move(min_winning)});
  validate(g);
  return g;
}

SimpleVotingGame make_unanimity(int n) {
  return make_weighted(n, std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

SimpleVotingGame make_dictator(int n, PlayerId dictator) {
  std::vector<std::int64_t> weights(static_cast<std::size_t>(n), 0);
  if (dictator < 0 || dictator >= n) throw VotingError(ErrorCode::InvalidPlayer, "dictator outside game");
  weights[static_cast<std::size_t>(dictator)] = 1;
  return make_weighted(1, std::move(weights));
}

Coalition yes_blockers(const SimpleVotingGame& game) {
  if (const auto* w = game.weighted()) {
    const std::int64_t total = std::accumulate(w->weights.begin(), w->weights.end(), std::int64_t{0});
    Coalition out = 0;
    for (int p = 0; p < game.players(); ++p) {
      if (total - w->weights[static_cast<std::size_t>(p)] < w->quota) out |= bit(p);
    }
    return out;
  }
  Coalition out = game.all();
  for (Coalition m : game.explicit_rule()->min_winning) out &= m;
  return out;
}

Coalition no_blockers(const SimpleVotingGame& game) {
  Coalition out = 0;
  for (int p = 0; p < game.players(); ++p) {
    if (game.is_winning(bit(p))) out |= bit(p);
  }
  return out;
}

Coalition dummies(const SimpleVotingGame& game, const Limits& limits) {
  Coalition used = 0;
  for (Coalition m : game.minimal_winning(limits)) used |= m;
  return game.all() & ~used;
}

bool is_dummy(const SimpleVotingGame& game, PlayerId p, const Limits& limits) {
  require_player(game, p);
  if (const auto* e = game.explicit_rule()) {
    return std::none_of(e->min_winning.begin(), e->min_winning.end(),
                        [p](Coalition m) { return contains(m, p); });
  }
  return WinTable::build(game, limits).swings(p) == 0;
}

int min_winning_size(const SimpleVotingGame& game, const Limits& limits) {
  if (const auto* w = game.weighted()) {
    auto sorted = w->weights;
    std::sort(sorted.rbegin(), sorted.rend());
    std::int64_t sum = 0;
    int k = 0;
    while (sum < w->quota && k < game.players()) sum += sorted[static_cast<std::size_t>(k++)];
    return k;
  }
  int best = game.players();
  for (Coalition m : game.minimal_winning(limits)) best = std::min(best, popcount(m));
  return best;
}

int min_blocking_size(const SimpleVotingGame& game, const Limits& limits) {
  if (const auto* w = game.weighted()) {
    auto sorted = w->weights;
    std::sort(sorted.rbegin(), sorted.rend());
    std::int64_t remaining = std::accumulate(sorted.begin(), sorted.end(), std::int64_t{0});
    int k = 0;
    while (remaining >= w->quota && k < game.players()) remaining -= sorted[static_cast<std::size_t>(k++)];
    return k;
  }
  const auto table = WinTable::build(game, limits);
  int largest_losing = 0;
  for (Coalition s = 0; s < table.size(); ++s) {
    if (!table[s]) largest_losing = std::max(largest_losing, popcount(s));
  }
  return game.players() - largest_losing;
}

bool same_winning_family(const SimpleVotingGame& a, const SimpleVotingGame& b, const Limits& limits) {
  if (a.players() != b.players()) return false;
  const auto ta = WinTable::build(a, limits);
  const auto tb = WinTable::build(b, limits);
  return std::equal(ta.words().begin(), ta.words().end(), tb.words().begin());
}

std::vector<PlayerId> members(Coalition s) {
  std::vector<PlayerId> out;
  for (; s != 0; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

Coalition coalition_of(const std::vector<PlayerId>& players) {
  Coalition s = 0;
  for (PlayerId p : players) s |= bit(p);
  return s;
}

}  // namespace vpower
