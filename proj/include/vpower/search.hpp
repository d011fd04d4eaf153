#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vpower/game.hpp"
#include "vpower/measures.hpp"
#include "vpower/postulates.hpp"

namespace vpower {

// ---------------------------------------------------------------------------
// Built-in games

struct NamedGame {
  std::string name;
  SimpleVotingGame game;
  std::string provenance;
};

/// Fixed games quoted in the blocker-postulate literature, plus small
/// unanimity and dictator instances.
std::vector<NamedGame> reference_corpus();

/// Looks up a corpus name. Besides the fixed entries accepts "unanimity<n>",
/// "dictator<n>" (player 1 dictates) and "dictator<n>_<d>" (1-based d).
/// Throws VotingError(ParseError) for unknown names.
SimpleVotingGame corpus_game(const std::string& name);

// ---------------------------------------------------------------------------
// Game spaces

/// Every nontrivial monotone game on n players (n <= 5).
struct ExhaustiveMonotone {
  int n = 0;
};

/// Every weight vector in [1, max_weight]^n (last player varying fastest)
/// and, for each, every valid quota in [quota_min, min(quota_max, total)].
struct WeightedGrid {
  int n = 0;
  int max_weight = 3;
  std::int64_t quota_min = 1;
  std::int64_t quota_max = std::int64_t{1} << 40;
};

/// `count` games with weights uniform in [0, max_weight] and quota uniform in
/// [1, total], drawn from a 64-bit Mersenne Twister seeded with `seed`.
struct RandomWeighted {
  int n = 0;
  int max_weight = 10;
  int count = 0;
  std::uint64_t seed = 0;
};

using GameSpace = std::variant<ExhaustiveMonotone, WeightedGrid, RandomWeighted>;

std::string describe(const GameSpace& space);

struct SpaceLimits {
  int max_exhaustive_players = 5;
  std::size_t max_games = 2'000'000;
};

/// Deterministic: identical parameters give the identical sequence.
/// Exhaustive spaces are ordered by number of minimal winning coalitions,
/// then lexicographically by the sorted coalition list.
/// Throws VotingError(SpaceTooLarge).
std::vector<SimpleVotingGame> enumerate_games(const GameSpace& space, const SpaceLimits& limits = {});

/// All antichains of nonempty subsets of [n] except the empty antichain, in
/// the canonical exhaustive order.
std::vector<std::vector<Coalition>> monotone_antichains(int n);

// ---------------------------------------------------------------------------
// Counterexample search

struct SearchOptions {
  /// Largest bloc tried; 0 means n for n <= 4 and 3 otherwise.
  int bloc_size_cap = 0;
  Limits limits;
  SpaceLimits space;
};

/// Bloc instances tried for a game: every member set of size 2..cap, by size
/// then numerically, led by its lowest member.
std::vector<BlocSpec> search_blocs(int n, int cap);
/// Permutations tried by ISO: all of them for n <= 4, else reversal and a
/// rotation.
std::vector<std::vector<int>> search_permutations(int n);

struct SearchStats {
  std::size_t games_tested = 0;
  std::size_t checks = 0;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t not_applicable = 0;
};

struct CounterexampleReport {
  PostulateId postulate;
  Measure measure;
  SimpleVotingGame game;
  /// Position of `game` in the space's enumeration order.
  std::size_t game_index = 0;
  Verdict verdict;
  SearchStats stats;
};

struct SearchOutcome {
  std::string space;
  std::optional<CounterexampleReport> found;
  SearchStats stats;
  double wall_seconds = 0;
};

/// Every instance the postulate quantifies over for one game, in the
/// documented order. `visit` returns false to stop early.
void for_each_verdict(const SimpleVotingGame& game, Measure m, PostulateId id, const SearchOptions& options,
                      const std::function<bool(const Verdict&)>& visit);

/// First failing instance in enumeration order, or none.
SearchOutcome find_counterexample(const GameSpace& space, Measure m, PostulateId id,
                                  const SearchOptions& options = {});
SearchOutcome find_counterexample(const std::vector<SimpleVotingGame>& games, const std::string& label,
                                  Measure m, PostulateId id, const SearchOptions& options = {});

/// Checks every instance without stopping; `found` holds the first failure.
SearchOutcome survey(const std::vector<SimpleVotingGame>& games, const std::string& label, Measure m,
                     PostulateId id, const SearchOptions& options = {});

/// One JSON line per report; excludes timing so identical runs match.
nlohmann::json report_to_json(const CounterexampleReport& report);
nlohmann::json summary_to_json(const SearchOutcome& outcome);

}  // namespace vpower
