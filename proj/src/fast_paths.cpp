// Weighted-game fast paths: count coalitions of the other players by
// (size, weight sum) with a knapsack-style DP, then read off the swings.

#include <algorithm>
#include <numeric>

#include "vpower/measures.hpp"

namespace vpower {
namespace {

const WeightedRule& require_weighted(const SimpleVotingGame& game, const Limits& limits) {
  const auto* w = game.weighted();
  if (w == nullptr) throw VotingError(ErrorCode::NotWeighted, "fast path needs a weighted game");
  validate(game);
  if (game.players() > 62) throw VotingError(ErrorCode::TooManyPlayers, "fast path counts overflow beyond 62 players");
  const std::int64_t total = std::accumulate(w->weights.begin(), w->weights.end(), std::int64_t{0});
  if (total > limits.max_weight_sum) {
    throw VotingError(ErrorCode::WeightSumTooLarge,
                      "weight sum " + std::to_string(total) + " exceeds " + std::to_string(limits.max_weight_sum));
  }
  return *w;
}

// counts[k][s]: coalitions of size k among players other than `skip` whose
// weight sum is s, with every sum >= quota folded into bucket `quota`.
// With `by_size` false only k = 0 is used and sizes are merged.
std::vector<std::vector<std::uint64_t>> coalition_counts(const WeightedRule& rule, PlayerId skip, bool by_size) {
  const auto cap = static_cast<std::size_t>(rule.quota);
  const std::size_t sizes = by_size ? rule.weights.size() : 1;
  std::vector<std::vector<std::uint64_t>> counts(sizes, std::vector<std::uint64_t>(cap + 1, 0));
  counts[0][0] = 1;
  int added = 0;
  for (std::size_t p = 0; p < rule.weights.size(); ++p) {
    if (static_cast<PlayerId>(p) == skip) continue;
    const auto w = static_cast<std::size_t>(rule.weights[p]);
    ++added;
    const int top = by_size ? added : 1;
    for (int k = top; k-- > 0;) {
      const std::size_t to = by_size ? static_cast<std::size_t>(k + 1) : 0;
      auto& src = counts[static_cast<std::size_t>(k)];
      auto& dst = counts[to];
      // Descending sums so each player is used at most once.
      for (std::size_t s = cap + 1; s-- > 0;) {
        if (src[s] == 0) continue;
        // In place (src == dst) this still works: targets are never below s.
        dst[std::min(cap, s + w)] += src[s];
      }
    }
  }
  return counts;
}

// Sum of counts over sums in [quota - w_i, quota - 1].
std::uint64_t swing_window(const std::vector<std::uint64_t>& row, std::int64_t quota, std::int64_t w) {
  std::uint64_t total = 0;
  for (std::int64_t s = std::max<std::int64_t>(0, quota - w); s < quota; ++s) {
    total += row[static_cast<std::size_t>(s)];
  }
  return total;
}

}  // namespace

PowerReport pb_fast(const SimpleVotingGame& game, const Limits& limits) {
  const auto& rule = require_weighted(game, limits);
  const int n = game.players();
  const Rational unit = inverse_power_of_two(static_cast<unsigned>(n));
  PowerReport report{Measure::PB, {}};
  for (PlayerId i = 0; i < n; ++i) {
    const auto counts = coalition_counts(rule, i, false);
    const auto swings = swing_window(counts[0], rule.quota, rule.weights[static_cast<std::size_t>(i)]);
    const Rational side = Rational(mpz_class(swings), 1) * unit;
    report.players.push_back({side + side, side, side});
  }
  return report;
}

PowerReport ss_fast(const SimpleVotingGame& game, const Limits& limits) {
  const auto& rule = require_weighted(game, limits);
  const int n = game.players();
  PowerReport report{Measure::SS, {}};
  for (PlayerId i = 0; i < n; ++i) {
    const auto counts = coalition_counts(rule, i, true);
    PlayerPower p;
    for (int k = 0; k < n; ++k) {
      const auto swings = swing_window(counts[static_cast<std::size_t>(k)], rule.quota,
                                       rule.weights[static_cast<std::size_t>(i)]);
      if (swings == 0) continue;
      // YES side: i joins k others (k + 1 agree). NO side: i and the n - k - 1
      // players outside the k-set vote NO (n - k agree).
      const Rational c(mpz_class(swings), 1);
      p.yes += c * ss_division_weight(n, k + 1);
      p.no += c * ss_division_weight(n, n - k);
    }
    p.total = p.yes + p.no;
    report.players.push_back(std::move(p));
  }
  return report;
}

}  // namespace vpower
