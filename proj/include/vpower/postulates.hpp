#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vpower/game.hpp"
#include "vpower/measures.hpp"

namespace vpower {

enum class PostulateId {
  SPB, MPB, SBB,
  SBK1, SBK2, WBK1, WBK2,
  BSP1, BSP2, SMP1, SMP2, WMP1, WMP2,
  ADD0, ADD1, ADD2,
  DUMMY, ISO,
};

inline constexpr PostulateId kAllPostulates[] = {
    PostulateId::SPB,  PostulateId::MPB,  PostulateId::SBB,  PostulateId::SBK1, PostulateId::SBK2,
    PostulateId::WBK1, PostulateId::WBK2, PostulateId::BSP1, PostulateId::BSP2, PostulateId::SMP1,
    PostulateId::SMP2, PostulateId::WMP1, PostulateId::WMP2, PostulateId::ADD0, PostulateId::ADD1,
    PostulateId::ADD2, PostulateId::DUMMY, PostulateId::ISO,
};

/// Upper-case tag, e.g. "SBK1".
const char* to_string(PostulateId id);
/// Case-insensitive; accepts "sbk1", "SBK-1", "add0".
std::optional<PostulateId> parse_postulate(std::string_view text);

/// What a postulate quantifies over.
enum class Qualifier { Bloc, Game, Pair, Permutation };
Qualifier qualifier_of(PostulateId id);

enum class Status { Holds, Fails, NotApplicable };
const char* to_string(Status s);

struct Witness {
  std::optional<BlocSpec> bloc;
  std::optional<PlayerId> player;
  std::optional<std::pair<PlayerId, PlayerId>> pair;
  /// Binding winning set (or set of NO-voters) for the blocker postulates.
  std::optional<Coalition> coalition;
  std::vector<int> permutation;
  /// The postulate asserts `lhs relation rhs`.
  Rational lhs;
  Rational rhs;
  std::string relation;
  std::vector<SimpleVotingGame> derived;
};

struct Verdict {
  PostulateId postulate = PostulateId::SBB;
  Measure measure = Measure::PB;
  Status status = Status::NotApplicable;
  /// Always present on Fails. On Holds it records the tightest instance.
  std::optional<Witness> witness;
  std::string note;

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
  bool applicable() const { return status != Status::NotApplicable; }
};

/// Power of the dictator in the one-player dictator game, computed.
Rational dictator_power(Measure m, const Limits& limits = {});

/// SPB, MPB, SBB, SBK1/2, WBK1/2. Bloc power is the lead's power in the
/// bloc game. `base` may carry precomputed powers of `game`.
Verdict check_bloc(const SimpleVotingGame& game, Measure m, PostulateId id, const BlocSpec& bloc,
                   const Limits& limits = {}, const PowerReport* base = nullptr);

inline Verdict check_sbb(const SimpleVotingGame& g, Measure m, const BlocSpec& b) { return check_bloc(g, m, PostulateId::SBB, b); }
inline Verdict check_spb(const SimpleVotingGame& g, Measure m, const BlocSpec& b) { return check_bloc(g, m, PostulateId::SPB, b); }
inline Verdict check_mpb(const SimpleVotingGame& g, Measure m, const BlocSpec& b) { return check_bloc(g, m, PostulateId::MPB, b); }
/// variant 1: YES-blockers, 2: NO-blockers.
Verdict check_sbk(const SimpleVotingGame& g, Measure m, const BlocSpec& b, int variant);
Verdict check_wbk(const SimpleVotingGame& g, Measure m, const BlocSpec& b, int variant);

/// BSP1/2, SMP1/2, WMP1/2 over every blocker of the relevant kind.
Verdict check_blocker_power(const SimpleVotingGame& game, Measure m, PostulateId id,
                            const Limits& limits = {}, const PowerReport* base = nullptr);
Verdict check_bsp(const SimpleVotingGame& g, Measure m, int variant);
Verdict check_smp(const SimpleVotingGame& g, Measure m, int variant);
Verdict check_wmp(const SimpleVotingGame& g, Measure m, int variant);

/// ADD0/1/2 for the ordered pair (i, j), compared by cross-multiplication.
/// `base` and `extended` may carry powers of `game` and of the game with the
/// added blocker.
Verdict check_add(const SimpleVotingGame& game, Measure m, PostulateId variant, PlayerId i, PlayerId j,
                  const Limits& limits = {}, const PowerReport* base = nullptr,
                  const PowerReport* extended = nullptr);

/// Zero power iff dummy, and deleting any dummy leaves the others unchanged.
Verdict check_dummy(const SimpleVotingGame& game, Measure m, const Limits& limits = {},
                    const PowerReport* base = nullptr);
/// Power of the permuted game equals the permuted power vector.
Verdict check_iso(const SimpleVotingGame& game, Measure m, const std::vector<int>& perm,
                  const Limits& limits = {}, const PowerReport* base = nullptr);

/// {"postulate", "measure", "holds" | "not_applicable", "witness": {...}}.
nlohmann::json verdict_to_json(const Verdict& v);
/// One human line, e.g. "FAIL SBK1 ss: bloc {1,2} lead 1: 1 <= 5/6 violated".
std::string describe(const Verdict& v);

}  // namespace vpower
