#include "vpower/postulates.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vpower/game_io.hpp"
#include "vpower/win_table.hpp"

namespace vpower {

const char* to_string(PostulateId id) {
  switch (id) {
    case PostulateId::SPB: return "SPB";
    case PostulateId::MPB: return "MPB";
    case PostulateId::SBB: return "SBB";
    case PostulateId::SBK1: return "SBK1";
    case PostulateId::SBK2: return "SBK2";
    case PostulateId::WBK1: return "WBK1";
    case PostulateId::WBK2: return "WBK2";
    case PostulateId::BSP1: return "BSP1";
    case PostulateId::BSP2: return "BSP2";
    case PostulateId::SMP1: return "SMP1";
    case PostulateId::SMP2: return "SMP2";
    case PostulateId::WMP1: return "WMP1";
    case PostulateId::WMP2: return "WMP2";
    case PostulateId::ADD0: return "ADD0";
    case PostulateId::ADD1: return "ADD1";
    case PostulateId::ADD2: return "ADD2";
    case PostulateId::DUMMY: return "DUMMY";
    case PostulateId::ISO: return "ISO";
  }
  return "?";
}

std::optional<PostulateId> parse_postulate(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c != '-' && c != '_') key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  for (PostulateId id : kAllPostulates) {
    if (key == to_string(id)) return id;
  }
  return std::nullopt;
}

Qualifier qualifier_of(PostulateId id) {
  switch (id) {
    case PostulateId::SPB:
    case PostulateId::MPB:
    case PostulateId::SBB:
    case PostulateId::SBK1:
    case PostulateId::SBK2:
    case PostulateId::WBK1:
    case PostulateId::WBK2: return Qualifier::Bloc;
    case PostulateId::ADD0:
    case PostulateId::ADD1:
    case PostulateId::ADD2: return Qualifier::Pair;
    case PostulateId::ISO: return Qualifier::Permutation;
    default: return Qualifier::Game;
  }
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::NotApplicable: return "not_applicable";
  }
  return "?";
}

Rational dictator_power(Measure m, const Limits& limits) {
  return compute_power(make_dictator(1, 0), m, limits).total(0);
}

namespace {

Verdict not_applicable(PostulateId id, Measure m, std::string why) {
  return Verdict{id, m, Status::NotApplicable, std::nullopt, std::move(why)};
}

bool satisfied(const Rational& lhs, const std::string& relation, const Rational& rhs) {
  if (relation == "<=") return lhs <= rhs;
  if (relation == ">=") return lhs >= rhs;
  if (relation == ">") return lhs > rhs;
  return lhs == rhs;
}

Verdict conclude(PostulateId id, Measure m, Witness w) {
  const Status s = satisfied(w.lhs, w.relation, w.rhs) ? Status::Holds : Status::Fails;
  return Verdict{id, m, s, std::move(w), {}};
}

PowerReport base_power(const SimpleVotingGame& game, Measure m, const Limits& limits, const PowerReport* base) {
  return base != nullptr ? *base : compute_power(game, m, limits);
}

}  // namespace

Verdict check_bloc(const SimpleVotingGame& game, Measure m, PostulateId id, const BlocSpec& bloc,
                   const Limits& limits, const PowerReport* base) {
  if (qualifier_of(id) != Qualifier::Bloc) throw std::invalid_argument("not a bloc postulate");
  if (bloc.members == 0) throw VotingError(ErrorCode::EmptyBloc, "bloc has no members");

  const Coalition ybk = yes_blockers(game);
  const Coalition nbk = no_blockers(game);
  switch (id) {
    case PostulateId::SBK1:
      if ((bloc.members & ybk) == 0) return not_applicable(id, m, "bloc contains no YES-blocker");
      break;
    case PostulateId::SBK2:
      if ((bloc.members & nbk) == 0) return not_applicable(id, m, "bloc contains no NO-blocker");
      break;
    case PostulateId::WBK1:
      if (!is_subset(bloc.members, ybk)) return not_applicable(id, m, "bloc has a member that is not a YES-blocker");
      break;
    case PostulateId::WBK2:
      if (!is_subset(bloc.members, nbk)) return not_applicable(id, m, "bloc has a member that is not a NO-blocker");
      break;
    default: break;
  }

  const auto before = base_power(game, m, limits, base);
  auto formed = form_bloc(game, bloc);
  const auto after = compute_power(formed.game, m, limits);

  Witness w;
  w.bloc = bloc;
  w.lhs = after.total(formed.bloc_player);
  Rational sum;
  Rational best;
  for (PlayerId p : members(bloc.members)) {
    sum += before.total(p);
    best = std::max(best, before.total(p));
  }
  if (id == PostulateId::SPB) {
    w.rhs = sum;
    w.relation = ">=";
  } else if (id == PostulateId::MPB) {
    w.rhs = best;
    w.relation = ">=";
  } else {
    w.rhs = sum;
    w.relation = "<=";
  }
  w.derived.push_back(std::move(formed.game));
  return conclude(id, m, std::move(w));
}

Verdict check_sbk(const SimpleVotingGame& g, Measure m, const BlocSpec& b, int variant) {
  return check_bloc(g, m, variant == 1 ? PostulateId::SBK1 : PostulateId::SBK2, b);
}

Verdict check_wbk(const SimpleVotingGame& g, Measure m, const BlocSpec& b, int variant) {
  return check_bloc(g, m, variant == 1 ? PostulateId::WBK1 : PostulateId::WBK2, b);
}

namespace {

// A smallest winning coalition (first in numeric order among the smallest).
Coalition smallest_winning(const SimpleVotingGame& game, const Limits& limits) {
  Coalition best = game.all();
  for (Coalition m : game.minimal_winning(limits)) {
    if (popcount(m) < popcount(best) || (popcount(m) == popcount(best) && m < best)) best = m;
  }
  return best;
}

// A smallest set of NO-voters that forces NO: the complement of a largest
// losing coalition.
Coalition smallest_blocking(const SimpleVotingGame& game, const Limits& limits) {
  const auto table = WinTable::build(game, limits);
  Coalition best = game.all();
  for (Coalition s = 0; s < table.size(); ++s) {
    if (table[s]) continue;
    const Coalition blocking = game.all() & ~s;
    if (popcount(blocking) < popcount(best) || (popcount(blocking) == popcount(best) && blocking < best)) {
      best = blocking;
    }
  }
  return best;
}

}  // namespace

Verdict check_blocker_power(const SimpleVotingGame& game, Measure m, PostulateId id,
                            const Limits& limits, const PowerReport* base) {
  const bool yes_side = id == PostulateId::BSP1 || id == PostulateId::SMP1 || id == PostulateId::WMP1;
  const Coalition blockers = yes_side ? yes_blockers(game) : no_blockers(game);
  const char* kind = yes_side ? "YES-blocker" : "NO-blocker";
  if (blockers == 0) return not_applicable(id, m, std::string("game has no ") + kind);

  Coalition binding = 0;
  if (id == PostulateId::WMP1 || id == PostulateId::WMP2) {
    // The only all-blocker set that can be winning (resp. NO-successful) is
    // the full blocker set itself.
    const bool qualifies = yes_side ? game.is_winning(blockers) : !game.is_winning(game.all() & ~blockers);
    if (!qualifies) {
      return not_applicable(id, m, std::string("no ") + (yes_side ? "winning" : "NO-successful") +
                                       " set consists only of " + kind + "s");
    }
    binding = blockers;
  } else {
    binding = yes_side ? smallest_winning(game, limits) : smallest_blocking(game, limits);
  }

  const auto power = base_power(game, m, limits, base);
  const Rational size(popcount(binding));
  const Rational share_total = power.sum();
  const bool share = id == PostulateId::BSP1 || id == PostulateId::BSP2;
  if (share && share_total.is_zero()) return not_applicable(id, m, "total power is zero");
  const Rational bound = share ? Rational(1) / size : dictator_power(m, limits) / size;

  std::optional<Witness> tightest;
  for (PlayerId b : members(blockers)) {
    Witness w;
    w.player = b;
    w.coalition = binding;
    w.lhs = share ? power.total(b) / share_total : power.total(b);
    w.rhs = bound;
    w.relation = ">=";
    if (!tightest || w.lhs - w.rhs < tightest->lhs - tightest->rhs) tightest = std::move(w);
  }
  return conclude(id, m, std::move(*tightest));
}

Verdict check_bsp(const SimpleVotingGame& g, Measure m, int variant) {
  return check_blocker_power(g, m, variant == 1 ? PostulateId::BSP1 : PostulateId::BSP2);
}
Verdict check_smp(const SimpleVotingGame& g, Measure m, int variant) {
  return check_blocker_power(g, m, variant == 1 ? PostulateId::SMP1 : PostulateId::SMP2);
}
Verdict check_wmp(const SimpleVotingGame& g, Measure m, int variant) {
  return check_blocker_power(g, m, variant == 1 ? PostulateId::WMP1 : PostulateId::WMP2);
}

Verdict check_add(const SimpleVotingGame& game, Measure m, PostulateId variant, PlayerId i, PlayerId j,
                  const Limits& limits, const PowerReport* base, const PowerReport* extended) {
  if (qualifier_of(variant) != Qualifier::Pair) throw std::invalid_argument("not an added-blocker postulate");
  require_player(game, i);
  require_player(game, j);
  if (i == j) return not_applicable(variant, m, "pair must name two different players");

  auto bigger = variant == PostulateId::ADD2 ? add_no_blocker(game) : add_yes_blocker(game);
  const auto before = base_power(game, m, limits, base);
  const auto after = extended != nullptr ? *extended : compute_power(bigger, m, limits);
  auto component = [variant](const PowerReport& r, PlayerId p) -> const Rational& {
    switch (variant) {
      case PostulateId::ADD1: return r.yes(p);
      case PostulateId::ADD2: return r.no(p);
      default: return r.total(p);
    }
  };
  const Rational& i0 = component(before, i);
  const Rational& j0 = component(before, j);
  const Rational& i1 = component(after, i);
  const Rational& j1 = component(after, j);
  if (j0.is_zero() || j1.is_zero()) {
    // 0/0 on both sides counts as equal only for a pair of dummies; any other
    // zero denominator leaves the ratio undefined.
    const bool all_zero = i0.is_zero() && i1.is_zero() && j0.is_zero() && j1.is_zero();
    if (all_zero && is_dummy(game, i, limits) && is_dummy(game, j, limits) && is_dummy(bigger, i, limits) &&
        is_dummy(bigger, j, limits)) {
      return Verdict{variant, m, Status::Holds, std::nullopt, "both players are dummies"};
    }
    return not_applicable(variant, m, "denominator player has zero power");
  }

  Witness w;
  w.pair = {i, j};
  w.lhs = i0 / j0;
  w.rhs = i1 / j1;
  w.relation = "==";
  w.derived.push_back(std::move(bigger));
  // Cross-multiplied comparison; the stored ratios are for reporting.
  const bool equal = i0 * j1 == i1 * j0;
  Verdict v{variant, m, equal ? Status::Holds : Status::Fails, std::move(w), {}};
  return v;
}

Verdict check_dummy(const SimpleVotingGame& game, Measure m, const Limits& limits, const PowerReport* base) {
  const auto power = base_power(game, m, limits, base);
  const Coalition dummy_set = dummies(game, limits);
  for (PlayerId p = 0; p < game.players(); ++p) {
    const bool zero = power.total(p).is_zero();
    if (zero != contains(dummy_set, p)) {
      Witness w;
      w.player = p;
      w.lhs = power.total(p);
      w.rhs = Rational(0);
      w.relation = contains(dummy_set, p) ? "==" : ">";
      return Verdict{PostulateId::DUMMY, m, Status::Fails, std::move(w),
                     contains(dummy_set, p) ? "dummy has nonzero power" : "non-dummy has zero power"};
    }
  }
  for (PlayerId d : members(dummy_set)) {
    auto reduced = delete_dummy(game, d, limits);
    const auto after = compute_power(reduced.game, m, limits);
    for (PlayerId p = 0; p < game.players(); ++p) {
      const int q = reduced.index_map[static_cast<std::size_t>(p)];
      if (q < 0 || after.total(q) == power.total(p)) continue;
      Witness w;
      w.player = p;
      w.lhs = after.total(q);
      w.rhs = power.total(p);
      w.relation = "==";
      w.derived.push_back(std::move(reduced.game));
      return Verdict{PostulateId::DUMMY, m, Status::Fails, std::move(w),
                     "deleting dummy " + std::to_string(d + 1) + " changed a power"};
    }
  }
  return Verdict{PostulateId::DUMMY, m, Status::Holds, std::nullopt, {}};
}

Verdict check_iso(const SimpleVotingGame& game, Measure m, const std::vector<int>& perm,
                  const Limits& limits, const PowerReport* base) {
  auto permuted = permute_players(game, perm);
  const auto power = base_power(game, m, limits, base);
  const auto after = compute_power(permuted, m, limits);
  for (PlayerId p = 0; p < game.players(); ++p) {
    const auto& moved = after.players[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])];
    const auto& orig = power.players[static_cast<std::size_t>(p)];
    if (moved.total == orig.total && moved.yes == orig.yes && moved.no == orig.no) continue;
    Witness w;
    w.player = p;
    w.permutation = perm;
    w.lhs = moved.total;
    w.rhs = orig.total;
    w.relation = "==";
    w.derived.push_back(std::move(permuted));
    return Verdict{PostulateId::ISO, m, Status::Fails, std::move(w), {}};
  }
  return Verdict{PostulateId::ISO, m, Status::Holds, std::nullopt, {}};
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json out{{"postulate", to_string(v.postulate)}, {"measure", to_string(v.measure)}};
  if (!v.applicable()) {
    out["not_applicable"] = true;
  } else {
    out["holds"] = v.holds();
  }
  if (!v.note.empty()) out["note"] = v.note;
  if (v.witness) {
    const Witness& w = *v.witness;
    nlohmann::json wj{{"lhs", w.lhs.fraction()}, {"rhs", w.rhs.fraction()}, {"relation", w.relation}};
    if (w.bloc) {
      std::vector<int> labels;
      for (PlayerId p : members(w.bloc->members)) labels.push_back(p + 1);
      wj["bloc"] = labels;
      wj["lead"] = w.bloc->lead + 1;
    }
    if (w.player) wj["player"] = *w.player + 1;
    if (w.pair) wj["pair"] = {w.pair->first + 1, w.pair->second + 1};
    if (w.coalition) {
      std::vector<int> labels;
      for (PlayerId p : members(*w.coalition)) labels.push_back(p + 1);
      wj["coalition"] = labels;
    }
    if (!w.permutation.empty()) {
      std::vector<int> labels;
      for (int p : w.permutation) labels.push_back(p + 1);
      wj["permutation"] = labels;
    }
    if (!w.derived.empty()) {
      auto games = nlohmann::json::array();
      for (const auto& g : w.derived) games.push_back(game_to_json(g));
      wj["derived"] = games;
    }
    out["witness"] = std::move(wj);
  }
  return out;
}

std::string describe(const Verdict& v) {
  std::ostringstream os;
  os << (v.status == Status::Holds ? "HOLDS" : v.status == Status::Fails ? "FAIL" : "N/A")
     << ' ' << to_string(v.postulate) << ' ' << to_string(v.measure);
  if (v.witness) {
    const Witness& w = *v.witness;
    os << ':';
    if (w.bloc) os << " bloc " << describe_coalition(w.bloc->members) << " lead " << w.bloc->lead + 1;
    if (w.pair) os << " pair (" << w.pair->first + 1 << ',' << w.pair->second + 1 << ')';
    if (w.player) os << " player " << *w.player + 1;
    if (w.coalition) os << " set " << describe_coalition(*w.coalition);
    os << "  " << w.lhs << ' ' << w.relation << ' ' << w.rhs;
    if (v.fails()) os << " violated";
  }
  if (!v.note.empty()) os << " (" << v.note << ')';
  return os.str();
}

}  // namespace vpower
