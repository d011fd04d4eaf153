#include "vpower/reproduce.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "vpower/game_io.hpp"
#include "vpower/measures.hpp"
#include "vpower/postulates.hpp"
#include "vpower/search.hpp"

namespace vpower {

namespace {

Rational frac(long p, long q) { return Rational(p) / Rational(q); }

class Collector {
 public:
  explicit Collector(std::string group) : group_(std::move(group)) {}

  void equal(const std::string& label, const Rational& expected, const Rational& actual) {
    out_.push_back({group_, label, expected.str(), actual.str(), expected == actual});
  }
  void less(const std::string& label, const Rational& small, const Rational& big) {
    out_.push_back({group_, label, small.str() + " < " + big.str(), small.str() + (small < big ? " < " : " >= ") + big.str(),
                    small < big});
  }
  void status(const std::string& label, Status expected, const Verdict& v) {
    std::string actual = to_string(v.status);
    if (v.witness) actual += " (" + v.witness->lhs.str() + ' ' + v.witness->relation + ' ' + v.witness->rhs.str() + ")";
    out_.push_back({group_, label, to_string(expected), actual, v.status == expected});
  }
  void none_found(const std::string& label, const SearchOutcome& outcome) {
    std::string actual = outcome.found ? "counterexample in game " + describe(outcome.found->game)
                                       : "none in " + std::to_string(outcome.stats.checks) + " checks";
    out_.push_back({group_, label, "no counterexample", actual, !outcome.found && outcome.stats.holds > 0});
  }
  std::vector<ReproCheck> take() { return std::move(out_); }

 private:
  std::string group_;
  std::vector<ReproCheck> out_;
};

// The exhaustive four-player space is shared by the "holds" groups.
const std::vector<SimpleVotingGame>& four_player_games() {
  static const auto games = enumerate_games(ExhaustiveMonotone{4});
  return games;
}

void exhaustive_holds(Collector& c, Measure m, std::initializer_list<PostulateId> ids) {
  SearchOptions options;
  options.bloc_size_cap = 4;
  for (PostulateId id : ids) {
    const auto outcome = find_counterexample(four_player_games(), "ExhaustiveMonotone(n=4)", m, id, options);
    c.none_found(std::string(to_string(m)) + " " + to_string(id) + " over all 4-player games", outcome);
  }
}

std::vector<ReproCheck> pb_bloc_unanimity() {
  Collector c("1");
  const auto g = make_unanimity(3);
  const auto power = pb(g);
  for (PlayerId p = 0; p < 3; ++p) c.equal("PB_" + std::to_string(p + 1) + " on unanimity3", frac(1, 4), power.total(p));
  c.equal("sum of PB on unanimity3", frac(3, 4), power.sum());
  const auto formed = form_bloc(g, {g.all(), 0});
  c.equal("PB of the bloc {1,2,3}", Rational(1), pb(formed.game).total(formed.bloc_player));
  c.status("WBK1 for PB, bloc {1,2,3}", Status::Fails, check_wbk(g, Measure::PB, {g.all(), 0}, 1));
  return c.take();
}

std::vector<ReproCheck> ss_bloc_weighted() {
  Collector c("2");
  const auto g = make_weighted(3, {2, 1, 1});
  const auto power = ss(g);
  c.equal("SS_1 on {3;2,1,1}", frac(2, 3), power.total(0));
  c.equal("SS_2 on {3;2,1,1}", frac(1, 6), power.total(1));
  c.equal("SS_3 on {3;2,1,1}", frac(1, 6), power.total(2));
  const BlocSpec bloc{0b011, 0};
  const auto formed = form_bloc(g, bloc);
  const auto bloc_power = ss(formed.game).total(formed.bloc_player);
  c.equal("SS of the bloc {1,2}", Rational(1), bloc_power);
  c.less("SS_1 + SS_2 below bloc power", power.total(0) + power.total(1), bloc_power);
  c.status("SBK1 for SS, bloc {1,2}", Status::Fails, check_sbk(g, Measure::SS, bloc, 1));
  exhaustive_holds(c, Measure::SS, {PostulateId::WBK1, PostulateId::WBK2});
  return c.take();
}

std::vector<ReproCheck> rm_subadditive() {
  Collector c("3");
  exhaustive_holds(c, Measure::RM, {PostulateId::SBK1, PostulateId::SBK2, PostulateId::WBK1, PostulateId::WBK2});
  return c.take();
}

std::vector<ReproCheck> pb_min_power() {
  Collector c("4");
  for (int n = 3; n <= 10; ++n) {
    const auto g = make_unanimity(n);
    const auto power = pb(g);
    const std::string tag = "unanimity" + std::to_string(n);
    c.equal("PB blocker power on " + tag, inverse_power_of_two(static_cast<unsigned>(n - 1)), power.total(0));
    c.less("blocker power below 1/n on " + tag, power.total(0), frac(1, n));
    c.status("WMP1 for PB on " + tag, Status::Fails, check_wmp(g, Measure::PB, 1));
  }
  return c.take();
}

std::vector<ReproCheck> ss_min_power() {
  Collector c("5");
  exhaustive_holds(c, Measure::SS, {PostulateId::SMP1, PostulateId::SMP2, PostulateId::WMP1, PostulateId::WMP2});
  return c.take();
}

std::vector<ReproCheck> rm_min_power() {
  Collector c("6");
  exhaustive_holds(c, Measure::RM, {PostulateId::SMP1, PostulateId::SMP2, PostulateId::WMP1, PostulateId::WMP2});
  return c.take();
}

std::vector<ReproCheck> pb_added() {
  Collector c("7");
  exhaustive_holds(c, Measure::PB, {PostulateId::ADD0, PostulateId::ADD1, PostulateId::ADD2});
  return c.take();
}

std::vector<ReproCheck> ss_added() {
  Collector c("8");
  const auto g = make_weighted(3, {2, 1, 1});
  const auto gy = make_weighted(8, {2, 1, 1, 5});
  const auto before = ss(g);
  const auto after = ss(gy);
  c.equal("SS+_1 on {3;2,1,1}", frac(2, 6), before.yes(0));
  c.equal("SS+_2 on {3;2,1,1}", frac(1, 12), before.yes(1));
  c.equal("SS+_1 on {8;2,1,1,5}", frac(5, 24), after.yes(0));
  c.equal("SS+_2 on {8;2,1,1,5}", frac(1, 24), after.yes(1));
  c.equal("added YES-blocker reproduces {8;2,1,1,5}", Rational(1),
          Rational(same_winning_family(add_yes_blocker(g), gy) ? 1 : 0));
  const auto v = check_add(g, Measure::SS, PostulateId::ADD1, 0, 1);
  c.equal("SS+ ratio 1:2 before", Rational(4), v.witness ? v.witness->lhs : Rational(0));
  c.equal("SS+ ratio 1:2 after", Rational(5), v.witness ? v.witness->rhs : Rational(0));
  c.status("ADD1 for SS, pair (1,2)", Status::Fails, v);
  return c.take();
}

std::vector<ReproCheck> rm_added() {
  Collector c("9");
  exhaustive_holds(c, Measure::RM, {PostulateId::ADD1, PostulateId::ADD2});
  return c.take();
}

std::vector<ReproCheck> bloc_example() {
  Collector c("bloc");
  const auto g = make_weighted(2, {1, 1, 2, 2, 2});
  const BlocSpec bloc{0b00011, 0};
  const auto formed = form_bloc(g, bloc);
  const auto s = ss(g);
  c.equal("SS_1 on {2;1,1,2,2,2}", frac(1, 20), s.total(0));
  c.equal("SS_2 on {2;1,1,2,2,2}", frac(1, 20), s.total(1));
  c.equal("SS of the bloc {1,2}", frac(1, 4), ss(formed.game).total(formed.bloc_player));
  const auto r = rm(g);
  c.equal("RM'_1 on {2;1,1,2,2,2}", frac(41, 320), r.total(0));
  c.equal("RM'_2 on {2;1,1,2,2,2}", frac(41, 320), r.total(1));
  const auto bloc_rm = rm(formed.game).total(formed.bloc_player);
  c.equal("RM' of the bloc {1,2}", frac(19, 64), bloc_rm);
  c.less("RM'_1 + RM'_2 below bloc power", r.total(0) + r.total(1), bloc_rm);
  c.equal("RM'_1 + RM'_2", frac(41, 160), r.total(0) + r.total(1));
  return c.take();
}

std::vector<ReproCheck> dictator_benchmark() {
  Collector c("dictator");
  for (Measure m : kAllMeasures) c.equal(std::string(to_string(m)) + " of the one-player dictator", Rational(1), dictator_power(m));
  return c.take();
}

std::vector<ReproCheck> ss_efficiency() {
  Collector c("efficiency");
  for (const auto& entry : reference_corpus()) c.equal("sum of SS on " + entry.name, Rational(1), ss(entry.game).sum());
  return c.take();
}

using GroupFn = std::vector<ReproCheck> (*)();

const std::vector<std::pair<std::string, GroupFn>>& registry() {
  static const std::vector<std::pair<std::string, GroupFn>> groups{
      {"1", pb_bloc_unanimity}, {"2", ss_bloc_weighted}, {"3", rm_subadditive},
      {"4", pb_min_power},      {"5", ss_min_power},     {"6", rm_min_power},
      {"7", pb_added},          {"8", ss_added},         {"9", rm_added},
      {"bloc", bloc_example},   {"dictator", dictator_benchmark}, {"efficiency", ss_efficiency},
  };
  return groups;
}

}  // namespace

const std::vector<std::string>& reproduce_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<ReproCheck> reproduce(const std::string& group) {
  std::vector<ReproCheck> out;
  bool matched = false;
  for (const auto& [name, fn] : registry()) {
    if (!group.empty() && name != group) continue;
    matched = true;
    auto checks = fn();
    out.insert(out.end(), checks.begin(), checks.end());
  }
  if (!matched) throw std::invalid_argument("unknown reproduce group '" + group + "'");
  return out;
}

nlohmann::json repro_to_json(const ReproCheck& check) {
  return {{"group", check.group}, {"label", check.label}, {"expected", check.expected},
          {"actual", check.actual}, {"pass", check.pass}};
}

}  // namespace vpower
