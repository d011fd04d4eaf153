#include "vpower/measures.hpp"

#include <stdexcept>

#include "vpower/win_table.hpp"

namespace vpower {

const char* to_string(Measure m) {
  switch (m) {
    case Measure::PB: return "pb";
    case Measure::SS: return "ss";
    case Measure::RM: return "rm";
  }
  return "?";
}

std::optional<Measure> parse_measure(std::string_view text) {
  if (text == "pb" || text == "PB") return Measure::PB;
  if (text == "ss" || text == "SS") return Measure::SS;
  if (text == "rm" || text == "RM") return Measure::RM;
  return std::nullopt;
}

std::vector<Rational> PowerReport::totals() const {
  std::vector<Rational> out;
  out.reserve(players.size());
  for (const auto& p : players) out.push_back(p.total);
  return out;
}

Rational PowerReport::sum() const {
  Rational s;
  for (const auto& p : players) s += p.total;
  return s;
}

bool is_yes_decisive(const SimpleVotingGame& game, PlayerId i, const Division& d) {
  return d.votes_yes(i) && game.is_winning(d.yes) && !game.is_winning(d.yes & ~bit(i));
}

bool is_no_decisive(const SimpleVotingGame& game, PlayerId i, const Division& d) {
  return !d.votes_yes(i) && !game.is_winning(d.yes) && game.is_winning(d.yes | bit(i));
}

bool is_successful(const SimpleVotingGame& game, PlayerId i, const Division& d) {
  return d.votes_yes(i) == game.is_winning(d.yes);
}

PowerReport pb(const SimpleVotingGame& game, const Limits& limits) {
  const auto table = WinTable::build(game, limits);
  const int n = game.players();
  const Rational unit = inverse_power_of_two(static_cast<unsigned>(n));
  PowerReport report{Measure::PB, {}};
  for (PlayerId i = 0; i < n; ++i) {
    // Each swing pair (S, S + i) is one NO-decisive and one YES-decisive division.
    const Rational side = Rational(mpz_class(table.swings(i)), 1) * unit;
    report.players.push_back({side + side, side, side});
  }
  return report;
}

std::vector<Rational> pb_star(const SimpleVotingGame& game, const Limits& limits) {
  const auto table = WinTable::build(game, limits);
  const int n = game.players();
  std::vector<std::uint64_t> count(static_cast<std::size_t>(n), 0);
  for (Coalition s = 0; s < table.size(); ++s) {
    if (!table[s]) continue;
    for (Coalition rest = s; rest != 0; rest &= rest - 1) {
      const Coalition b = rest & -rest;
      if (!table[s & ~b]) ++count[static_cast<std::size_t>(std::countr_zero(b))];
    }
  }
  const Rational unit = inverse_power_of_two(static_cast<unsigned>(n - 1));
  std::vector<Rational> out;
  for (auto c : count) out.push_back(Rational(mpz_class(c), 1) * unit);
  return out;
}

Rational ss_division_weight(int n, int agreeing) {
  const auto k = static_cast<unsigned>(agreeing);
  const auto un = static_cast<unsigned>(n);
  return Rational(factorial(k - 1) * factorial(un - k), 2 * factorial(un));
}

PowerReport ss(const SimpleVotingGame& game, const Limits& limits) {
  const auto table = WinTable::build(game, limits);
  const int n = game.players();
  const auto cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1);
  // [player][agreeing voters] counts for each side.
  std::vector<std::uint64_t> yes_count(cells, 0);
  std::vector<std::uint64_t> no_count(cells, 0);
  auto cell = [n](PlayerId i, int k) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(k); };
  for (Coalition s = 0; s < table.size(); ++s) {
    const int size = popcount(s);
    if (table[s]) {
      for (Coalition rest = s; rest != 0; rest &= rest - 1) {
        const Coalition b = rest & -rest;
        if (!table[s & ~b]) ++yes_count[cell(std::countr_zero(b), size)];
      }
    } else {
      for (Coalition rest = game.all() & ~s; rest != 0; rest &= rest - 1) {
        const Coalition b = rest & -rest;
        if (table[s | b]) ++no_count[cell(std::countr_zero(b), n - size)];
      }
    }
  }
  std::vector<Rational> weight;
  for (int k = 0; k <= n; ++k) weight.push_back(k == 0 ? Rational(0) : ss_division_weight(n, k));
  PowerReport report{Measure::SS, {}};
  for (PlayerId i = 0; i < n; ++i) {
    PlayerPower p;
    for (int k = 1; k <= n; ++k) {
      if (auto c = yes_count[cell(i, k)]) p.yes += Rational(mpz_class(c), 1) * weight[static_cast<std::size_t>(k)];
      if (auto c = no_count[cell(i, k)]) p.no += Rational(mpz_class(c), 1) * weight[static_cast<std::size_t>(k)];
    }
    p.total = p.yes + p.no;
    report.players.push_back(std::move(p));
  }
  return report;
}

std::vector<Rational> ss_star(const SimpleVotingGame& game, const Limits& limits) {
  const auto table = WinTable::build(game, limits);
  const int n = game.players();
  const auto un = static_cast<unsigned>(n);
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (Coalition s = 1; s < table.size(); ++s) {
    if (!table[s]) continue;
    const auto size = static_cast<unsigned>(popcount(s));
    const Rational weight(factorial(size - 1) * factorial(un - size), factorial(un));
    for (Coalition rest = s; rest != 0; rest &= rest - 1) {
      const Coalition b = rest & -rest;
      if (!table[s & ~b]) out[static_cast<std::size_t>(std::countr_zero(b))] += weight;
    }
  }
  return out;
}

PowerReport compute_power(const SimpleVotingGame& game, Measure m, const Limits& limits) {
  switch (m) {
    case Measure::PB: return pb(game, limits);
    case Measure::SS: return ss(game, limits);
    case Measure::RM: return rm(game, limits);
  }
  throw std::invalid_argument("unknown measure");
}

std::vector<PowerSplit> power_split(const PowerReport& report) {
  std::vector<PowerSplit> out;
  for (std::size_t p = 0; p < report.players.size(); ++p) {
    const auto& pp = report.players[p];
    if (report.measure != Measure::RM && pp.yes != pp.no) {
      throw std::logic_error(std::string(to_string(report.measure)) +
                             " report is not strategy symmetric for player " + std::to_string(p + 1));
    }
    out.push_back({pp.yes, pp.no});
  }
  return out;
}

}  // namespace vpower
