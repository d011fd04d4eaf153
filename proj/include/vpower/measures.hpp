#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "vpower/game.hpp"
#include "vpower/rational.hpp"

namespace vpower {

enum class Measure { PB, SS, RM };

inline constexpr Measure kAllMeasures[] = {Measure::PB, Measure::SS, Measure::RM};

/// "pb", "ss", "rm".
const char* to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view text);

struct PlayerPower {
  Rational total;
  Rational yes;
  Rational no;
};

/// Per-player power with its YES/NO decomposition. total == yes + no.
struct PowerReport {
  Measure measure = Measure::PB;
  std::vector<PlayerPower> players;

  const Rational& total(PlayerId p) const { return players.at(static_cast<std::size_t>(p)).total; }
  const Rational& yes(PlayerId p) const { return players.at(static_cast<std::size_t>(p)).yes; }
  const Rational& no(PlayerId p) const { return players.at(static_cast<std::size_t>(p)).no; }
  std::vector<Rational> totals() const;
  Rational sum() const;
};

// ---------------------------------------------------------------------------
// Decisiveness

bool is_yes_decisive(const SimpleVotingGame& game, PlayerId i, const Division& d);
bool is_no_decisive(const SimpleVotingGame& game, PlayerId i, const Division& d);
inline bool is_decisive(const SimpleVotingGame& game, PlayerId i, const Division& d) {
  return is_yes_decisive(game, i, d) || is_no_decisive(game, i, d);
}
/// Player's vote matches the outcome.
bool is_successful(const SimpleVotingGame& game, PlayerId i, const Division& d);

// ---------------------------------------------------------------------------
// Penrose-Banzhaf and Shapley-Shubik by enumeration of all divisions

PowerReport pb(const SimpleVotingGame& game, const Limits& limits = {});
/// YES-decisive divisions only, each weighted 1/2^(n-1).
std::vector<Rational> pb_star(const SimpleVotingGame& game, const Limits& limits = {});

/// Weight of a division in which `agreeing` voters (the evaluated player
/// included) vote the way the evaluated player does.
Rational ss_division_weight(int n, int agreeing);
PowerReport ss(const SimpleVotingGame& game, const Limits& limits = {});
/// YES-decisive divisions only, weighted (|S|-1)!(n-|S|)!/n!.
std::vector<Rational> ss_star(const SimpleVotingGame& game, const Limits& limits = {});

/// Generating-function DP over weight sums; weighted games only. Exact and
/// identical to pb()/ss(), polynomial in n and the total weight.
PowerReport pb_fast(const SimpleVotingGame& game, const Limits& limits = {});
PowerReport ss_fast(const SimpleVotingGame& game, const Limits& limits = {});

// ---------------------------------------------------------------------------
// Recursive measure

/// Divisions one vote away, toward fewer YES votes for a winning division
/// and toward more YES votes for a losing one, with the same outcome.
std::vector<Division> loyal_children(const SimpleVotingGame& game, const Division& d);

/// Efficacy scores of every player in every division.
///
/// Winning divisions are filled in ascending numeric order of the YES-set
/// and losing ones in descending order; either way a division's loyal
/// children precede it.
class EfficacyTable {
 public:
  static EfficacyTable compute(const SimpleVotingGame& game, const Limits& limits = {});

  int players() const { return n_; }
  const Rational& at(PlayerId i, Coalition yes_set) const {
    return alpha_[static_cast<std::size_t>(yes_set) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(i)];
  }
  /// alpha when i votes YES in the division, else 0.
  Rational yes_efficacy(PlayerId i, Coalition yes_set) const {
    return contains(yes_set, i) ? at(i, yes_set) : Rational(0);
  }
  Rational no_efficacy(PlayerId i, Coalition yes_set) const {
    return contains(yes_set, i) ? Rational(0) : at(i, yes_set);
  }

 private:
  EfficacyTable(int n, std::vector<Rational> alpha) : n_(n), alpha_(std::move(alpha)) {}
  int n_;
  std::vector<Rational> alpha_;
};

Rational rm_efficacy(const SimpleVotingGame& game, PlayerId i, const Division& d,
                     const Limits& limits = {});
PowerReport rm(const SimpleVotingGame& game, const Limits& limits = {});
PowerReport rm(const EfficacyTable& table);

/// Independent route to the RM efficacy score: walks every path of the
/// loyal-children DAG from `d`, each step taken with probability
/// 1/|LC|, and sums the probability of paths that reach a division where `i`
/// is decisive. Exponential; refuses n above `max_players`.
Rational rm_path_oracle(const SimpleVotingGame& game, PlayerId i, const Division& d,
                        int max_players = 8);

// ---------------------------------------------------------------------------

PowerReport compute_power(const SimpleVotingGame& game, Measure m, const Limits& limits = {});

struct PowerSplit {
  Rational yes;
  Rational no;
};

/// The stored YES/NO decomposition. For PB and SS throws std::logic_error if
/// the two sides differ, since both are strategy symmetric.
std::vector<PowerSplit> power_split(const PowerReport& report);

}  // namespace vpower
