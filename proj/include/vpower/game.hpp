#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vpower {

/// Bit p set means player p belongs to the coalition.
using Coalition = std::uint64_t;
/// 0-based player index.
using PlayerId = int;

/// Hard upper bound on the number of players any game can hold.
inline constexpr int kMaxRepresentablePlayers = 63;

inline constexpr Coalition bit(PlayerId p) { return Coalition{1} << p; }
inline constexpr Coalition full_mask(int n) { return n >= 64 ? ~Coalition{0} : (Coalition{1} << n) - 1; }
inline constexpr bool contains(Coalition s, PlayerId p) { return (s >> p) & 1U; }
inline constexpr int popcount(Coalition s) { return std::popcount(s); }
inline constexpr bool is_subset(Coalition a, Coalition b) { return (a & ~b) == 0; }

enum class ErrorCode {
  TrivialGame,
  NotAntichain,
  InvalidCoalition,
  InvalidWeights,
  InvalidPlayer,
  EmptyBloc,
  NotADummy,
  NotAPermutation,
  TooManyPlayers,
  NotWeighted,
  WeightSumTooLarge,
  SpaceTooLarge,
  ParseError,
};

const char* to_string(ErrorCode code);

class VotingError : public std::runtime_error {
 public:
  VotingError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Resource ceilings for operations that enumerate all 2^n divisions.
struct Limits {
  int max_players = 24;
  /// The recursive measure keeps an n x 2^n table of exact rationals.
  int rm_max_players = 16;
  std::int64_t max_weight_sum = std::int64_t{1} << 22;
};

/// A YES/NO vote profile: the YES-set, with the NO-set its complement.
struct Division {
  Coalition yes = 0;
  int n = 0;

  Coalition no() const { return full_mask(n) & ~yes; }
  bool votes_yes(PlayerId p) const { return contains(yes, p); }
  int yes_count() const { return popcount(yes); }
  Division with_yes(PlayerId p) const { return {yes | bit(p), n}; }
  Division with_no(PlayerId p) const { return {yes & ~bit(p), n}; }

  friend bool operator==(const Division&, const Division&) = default;
};

struct WeightedRule {
  std::int64_t quota = 0;
  std::vector<std::int64_t> weights;
  friend bool operator==(const WeightedRule&, const WeightedRule&) = default;
};

struct ExplicitRule {
  /// Minimal winning coalitions, kept sorted ascending.
  std::vector<Coalition> min_winning;
  friend bool operator==(const ExplicitRule&, const ExplicitRule&) = default;
};

using Rule = std::variant<WeightedRule, ExplicitRule>;

/// Binary monotone voting game. Construction does not validate; use the
/// make_* factories or validate() for checked games.
class SimpleVotingGame {
 public:
  explicit SimpleVotingGame(WeightedRule rule);
  SimpleVotingGame(int n, ExplicitRule rule);

  int players() const { return n_; }
  Coalition all() const { return full_mask(n_); }
  const Rule& rule() const { return rule_; }
  const WeightedRule* weighted() const { return std::get_if<WeightedRule>(&rule_); }
  const ExplicitRule* explicit_rule() const { return std::get_if<ExplicitRule>(&rule_); }

  bool is_winning(Coalition s) const;
  bool is_winning(const Division& d) const { return is_winning(d.yes); }

  /// The antichain of minimal winning coalitions. Weighted games derive it
  /// by enumeration and are subject to `limits.max_players`.
  std::vector<Coalition> minimal_winning(const Limits& limits = {}) const;

  friend bool operator==(const SimpleVotingGame&, const SimpleVotingGame&) = default;

 private:
  int n_;
  Rule rule_;
};

SimpleVotingGame make_weighted(std::int64_t quota, std::vector<std::int64_t> weights);
/// Canonicalizes (sorts, dedupes) the family, then validates it.
SimpleVotingGame make_explicit(int n, std::vector<Coalition> min_winning);
SimpleVotingGame make_unanimity(int n);
SimpleVotingGame make_dictator(int n, PlayerId dictator);

std::optional<VotingError> validation_error(const SimpleVotingGame& game);
/// Throws VotingError (TrivialGame, NotAntichain, InvalidCoalition, InvalidWeights).
void validate(const SimpleVotingGame& game);

void require_player(const SimpleVotingGame& game, PlayerId p);
void require_enumerable(int n, const Limits& limits);

/// Players present in every winning coalition.
Coalition yes_blockers(const SimpleVotingGame& game);
/// Players whose YES vote alone guarantees a YES outcome.
Coalition no_blockers(const SimpleVotingGame& game);
bool is_dummy(const SimpleVotingGame& game, PlayerId p, const Limits& limits = {});
Coalition dummies(const SimpleVotingGame& game, const Limits& limits = {});

/// Size of a smallest winning coalition.
int min_winning_size(const SimpleVotingGame& game, const Limits& limits = {});
/// Size of a smallest set of NO-voters that forces a NO outcome.
int min_blocking_size(const SimpleVotingGame& game, const Limits& limits = {});

/// Same winning family, compared by enumeration.
bool same_winning_family(const SimpleVotingGame& a, const SimpleVotingGame& b,
                         const Limits& limits = {});

std::vector<PlayerId> members(Coalition s);
Coalition coalition_of(const std::vector<PlayerId>& players);

// ---------------------------------------------------------------------------
// Transforms

struct BlocSpec {
  Coalition members = 0;
  PlayerId lead = 0;
};

/// Result of a transform that removes players. `index_map[old]` is the new
/// index, or -1 for a removed player.
struct ReducedGame {
  SimpleVotingGame game;
  std::vector<int> index_map;
};

struct BlocGame {
  SimpleVotingGame game;
  std::vector<int> index_map;
  /// Index of the bloc (former lead) in `game`.
  PlayerId bloc_player = 0;
};

/// Player `donor` hands its vote to `recipient`; the donor becomes a dummy
/// but stays in the game.
SimpleVotingGame donate(const SimpleVotingGame& game, PlayerId donor, PlayerId recipient);

/// Every non-lead member donates to the lead (ascending donor order) and the
/// donors are then deleted; survivors keep their relative order.
BlocGame form_bloc(const SimpleVotingGame& game, const BlocSpec& bloc);

/// Appends player n, present in every winning coalition.
SimpleVotingGame add_yes_blocker(const SimpleVotingGame& game);
/// Appends player n, whose YES vote alone wins.
SimpleVotingGame add_no_blocker(const SimpleVotingGame& game);

ReducedGame delete_dummy(const SimpleVotingGame& game, PlayerId p, const Limits& limits = {});

/// `perm[old] = new`.
SimpleVotingGame permute_players(const SimpleVotingGame& game, const std::vector<int>& perm);
Coalition permute_coalition(Coalition s, const std::vector<int>& perm);

}  // namespace vpower
