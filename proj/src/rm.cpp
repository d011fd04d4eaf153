#include <stdexcept>
#include <utility>

#include "vpower/measures.hpp"
#include "vpower/win_table.hpp"

namespace vpower {

std::vector<Division> loyal_children(const SimpleVotingGame& game, const Division& d) {
  std::vector<Division> out;
  const bool winning = game.is_winning(d.yes);
  // Winning: one YES-voter switches to NO. Losing: one NO-voter switches to YES.
  const Coalition movers = winning ? d.yes : d.no();
  for (Coalition rest = movers; rest != 0; rest &= rest - 1) {
    const Coalition child = d.yes ^ (rest & -rest);
    if (game.is_winning(child) == winning) out.push_back({child, d.n});
  }
  return out;
}

namespace {

// Fills alpha for one division. `flip` is the set of players whose switch
// moves toward the loyal children (YES-voters when winning, NO-voters when
// losing). Players outside `flip` are unsuccessful and keep 0.
void fill_division(const WinTable& table, int n, Coalition s, Coalition flip,
                   std::vector<Rational>& alpha) {
  const auto row = static_cast<std::size_t>(s) * static_cast<std::size_t>(n);
  const bool winning = table[s];
  Coalition loyal = 0;
  for (Coalition rest = flip; rest != 0; rest &= rest - 1) {
    const Coalition b = rest & -rest;
    if (table[s ^ b] == winning) {
      loyal |= b;
    } else {
      alpha[row + static_cast<std::size_t>(std::countr_zero(b))] = Rational(1);
    }
  }
  if (loyal == 0) return;
  const Rational fan_out(popcount(loyal));
  for (Coalition rest = loyal; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    Rational sum;
    for (Coalition kids = loyal; kids != 0; kids &= kids - 1) {
      const Coalition child = s ^ (kids & -kids);
      sum += alpha[static_cast<std::size_t>(child) * static_cast<std::size_t>(n) + i];
    }
    alpha[row + i] = sum / fan_out;
  }
}

}  // namespace

EfficacyTable EfficacyTable::compute(const SimpleVotingGame& game, const Limits& limits) {
  const int n = game.players();
  if (n > limits.rm_max_players) {
    throw VotingError(ErrorCode::TooManyPlayers,
                      std::to_string(n) + " players exceeds the recursive-measure ceiling of " +
                          std::to_string(limits.rm_max_players));
  }
  const auto table = WinTable::build(game, limits);
  const Coalition all = game.all();
  std::vector<Rational> alpha(table.size() * static_cast<std::size_t>(n));
  // Children of a winning S are numerically smaller, of a losing S larger.
  for (Coalition s = 0; s < table.size(); ++s) {
    if (table[s]) fill_division(table, n, s, s, alpha);
  }
  for (Coalition s = table.size(); s-- > 0;) {
    if (!table[s]) fill_division(table, n, s, all & ~s, alpha);
  }
  return EfficacyTable(n, std::move(alpha));
}

Rational rm_efficacy(const SimpleVotingGame& game, PlayerId i, const Division& d, const Limits& limits) {
  require_player(game, i);
  return EfficacyTable::compute(game, limits).at(i, d.yes);
}

PowerReport rm(const EfficacyTable& table) {
  const int n = table.players();
  const Rational unit = inverse_power_of_two(static_cast<unsigned>(n));
  PowerReport report{Measure::RM, {}};
  const Coalition end = Coalition{1} << n;
  for (PlayerId i = 0; i < n; ++i) {
    PlayerPower p;
    for (Coalition s = 0; s < end; ++s) {
      const Rational& a = table.at(i, s);
      if (a.is_zero()) continue;
      (contains(s, i) ? p.yes : p.no) += a;
    }
    p.yes *= unit;
    p.no *= unit;
    p.total = p.yes + p.no;
    report.players.push_back(std::move(p));
  }
  return report;
}

PowerReport rm(const SimpleVotingGame& game, const Limits& limits) {
  return rm(EfficacyTable::compute(game, limits));
}

Rational rm_path_oracle(const SimpleVotingGame& game, PlayerId i, const Division& start, int max_players) {
  require_player(game, i);
  if (game.players() > max_players) {
    throw VotingError(ErrorCode::TooManyPlayers, "path oracle is limited to small games");
  }
  Rational reached;
  std::vector<std::pair<Division, Rational>> pending{{start, Rational(1)}};
  while (!pending.empty()) {
    auto [d, weight] = std::move(pending.back());
    pending.pop_back();
    if (is_decisive(game, i, d)) {
      reached += weight;
      continue;
    }
    if (!is_successful(game, i, d)) continue;
    const auto kids = loyal_children(game, d);
    if (kids.empty()) continue;
    const Rational step = weight / Rational(static_cast<long>(kids.size()));
    for (const auto& k : kids) pending.emplace_back(k, step);
  }
  return reached;
}

}  // namespace vpower
