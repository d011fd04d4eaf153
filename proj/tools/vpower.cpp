// vpower: command-line front end for voting-power measures and blocker
// postulates. Exit status: 0 success or holds, 1 a postulate fails,
// 2 usage or validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vpower/game_io.hpp"
#include "vpower/measures.hpp"
#include "vpower/postulates.hpp"
#include "vpower/report_io.hpp"
#include "vpower/reproduce.hpp"
#include "vpower/search.hpp"
#include "vpower/simd/kernels.hpp"

namespace {

using namespace vpower;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct GameSource {
  std::string file;
  std::string corpus;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--game", file, "game file (JSON)");
    auto* c = cmd->add_option("--corpus", corpus, "built-in game name");
    g->excludes(c);
  }

  SimpleVotingGame load() const {
    if (!file.empty()) return load_game(file);
    if (!corpus.empty()) return corpus_game(corpus);
    throw CLI::ValidationError("game", "one of --game or --corpus is required");
  }
};

std::vector<Measure> parse_measures(const std::vector<std::string>& names) {
  std::vector<Measure> out;
  for (const auto& name : names) {
    const auto m = parse_measure(name);
    if (!m) throw CLI::ValidationError("--measure", "unknown measure '" + name + "'");
    out.push_back(*m);
  }
  if (out.empty()) out.assign(std::begin(kAllMeasures), std::end(kAllMeasures));
  return out;
}

std::vector<PostulateId> parse_postulates(const std::vector<std::string>& names) {
  std::vector<PostulateId> out;
  for (const auto& name : names) {
    const auto id = parse_postulate(name);
    if (!id) throw CLI::ValidationError("--postulate", "unknown postulate '" + name + "'");
    out.push_back(*id);
  }
  return out;
}

// Parses a 1-based label list such as "1,2" into a coalition.
Coalition parse_bloc(const std::string& text, int n) {
  Coalition s = 0;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int label = 0;
    try {
      label = std::stoi(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--bloc", "bad player label '" + item + "'");
    }
    if (label < 1 || label > n) {
      throw VotingError(ErrorCode::InvalidPlayer, "player " + std::to_string(label) + " is not in the game");
    }
    s |= bit(label - 1);
  }
  if (s == 0) throw VotingError(ErrorCode::EmptyBloc, "bloc has no members");
  return s;
}

BlocSpec bloc_from(const std::string& text, int lead, int n) {
  const Coalition s = parse_bloc(text, n);
  const PlayerId l = lead > 0 ? lead - 1 : std::countr_zero(s);
  return {s, l};
}

// ---------------------------------------------------------------------------

int run_power(const GameSource& src, const std::vector<std::string>& measure_names, const std::string& format,
              bool fast) {
  const auto game = src.load();
  const auto measures = parse_measures(measure_names);
  auto rows = nlohmann::json::array();
  bool header = true;
  for (Measure m : measures) {
    PowerReport report;
    if (fast && m == Measure::PB) {
      report = pb_fast(game);
    } else if (fast && m == Measure::SS) {
      report = ss_fast(game);
    } else {
      report = compute_power(game, m);
    }
    if (format == "json") {
      for (auto& row : report_to_json(report)) rows.push_back(std::move(row));
    } else if (format == "csv") {
      auto text = report_to_csv(report);
      std::cout << (header ? text : text.substr(text.find('\n') + 1));
    } else {
      std::cout << (header ? "" : "\n") << report_to_table(report) << "sum     " << report.sum() << '\n';
    }
    header = false;
  }
  if (format == "json") std::cout << rows.dump(2) << '\n';
  return kOk;
}

int run_check(const GameSource& src, const std::vector<std::string>& postulate_names,
              const std::vector<std::string>& measure_names, const std::string& bloc_text, int lead,
              const std::vector<int>& pair, const std::string& format) {
  const auto game = src.load();
  const auto ids = parse_postulates(postulate_names);
  const auto measures = parse_measures(measure_names);
  if (pair.size() == 2) {
    require_player(game, pair[0] - 1);
    require_player(game, pair[1] - 1);
  }

  bool any_fail = false;
  auto out = nlohmann::json::array();
  auto emit = [&](const Verdict& v, const std::string& scope) {
    any_fail = any_fail || v.fails();
    if (format == "json") {
      auto j = verdict_to_json(v);
      if (!scope.empty()) j["scope"] = scope;
      out.push_back(std::move(j));
    } else {
      std::cout << describe(v) << (scope.empty() ? "" : "  [" + scope + "]") << '\n';
    }
  };

  for (PostulateId id : ids) {
    for (Measure m : measures) {
      const Qualifier q = qualifier_of(id);
      if (q == Qualifier::Bloc && !bloc_text.empty()) {
        emit(check_bloc(game, m, id, bloc_from(bloc_text, lead, game.players())), {});
      } else if (q == Qualifier::Pair && pair.size() == 2) {
        emit(check_add(game, m, id, pair[0] - 1, pair[1] - 1), {});
      } else if (q == Qualifier::Game) {
        for_each_verdict(game, m, id, {}, [&](const Verdict& v) {
          emit(v, {});
          return true;
        });
      } else {
        // No qualifier given: sweep every bloc, pair or permutation and
        // report the first failure, or a summary if none fails.
        std::size_t checked = 0;
        std::size_t applicable = 0;
        std::optional<Verdict> failure;
        for_each_verdict(game, m, id, {}, [&](const Verdict& v) {
          ++checked;
          if (v.applicable()) ++applicable;
          if (v.fails()) failure = v;
          return !failure;
        });
        if (failure) {
          emit(*failure, "first failure");
        } else if (applicable == 0) {
          emit(Verdict{id, m, Status::NotApplicable, std::nullopt, "no qualifying instance"}, {});
        } else {
          emit(Verdict{id, m, Status::Holds, std::nullopt, {}},
               "all " + std::to_string(applicable) + " of " + std::to_string(checked) + " instances");
        }
      }
    }
  }
  if (format == "json") std::cout << out.dump(2) << '\n';
  return any_fail ? kFails : kOk;
}

int run_bloc(const GameSource& src, const std::string& bloc_text, int lead) {
  const auto game = src.load();
  const auto formed = form_bloc(game, bloc_from(bloc_text, lead, game.players()));
  validate(formed.game);
  auto doc = game_to_json(formed.game);
  std::cout << doc.dump(2) << '\n';
  std::cerr << "bloc player " << formed.bloc_player + 1 << " in " << describe(formed.game) << '\n';
  return kOk;
}

int run_add_blocker(const GameSource& src, const std::string& kind) {
  const auto game = src.load();
  const auto bigger = kind == "no" ? add_no_blocker(game) : add_yes_blocker(game);
  validate(bigger);
  std::cout << game_to_json(bigger).dump(2) << '\n';
  return kOk;
}

struct SearchArgs {
  std::string space = "exhaustive";
  int n = 0;
  int max_n = 0;
  int max_weight = 3;
  int count = 100;
  std::uint64_t seed = 0;
  int bloc_cap = 0;
  bool all = false;
  std::vector<std::string> measures;
  std::vector<std::string> postulates;
};

int run_search(const SearchArgs& a) {
  const auto measures = parse_measures(a.measures);
  const auto ids = parse_postulates(a.postulates);
  if (ids.empty()) throw CLI::ValidationError("--postulate", "search needs at least one postulate");
  const int lo = a.n > 0 ? a.n : 1;
  const int hi = a.max_n > 0 ? a.max_n : lo;
  if (a.n == 0 && a.max_n == 0) throw CLI::ValidationError("--n", "search needs --n or --max-n");

  std::vector<SimpleVotingGame> games;
  std::string label;
  for (int n = (a.n > 0 || a.max_n == 0) ? lo : 1; n <= hi; ++n) {
    GameSpace space;
    if (a.space == "exhaustive") {
      space = ExhaustiveMonotone{n};
    } else if (a.space == "grid") {
      space = WeightedGrid{n, a.max_weight};
    } else if (a.space == "random") {
      space = RandomWeighted{n, a.max_weight, a.count, a.seed};
    } else {
      throw CLI::ValidationError("--space", "expected exhaustive, grid or random");
    }
    auto part = enumerate_games(space);
    games.insert(games.end(), part.begin(), part.end());
    label += (label.empty() ? "" : " + ") + describe(space);
  }

  SearchOptions options;
  options.bloc_size_cap = a.bloc_cap;
  bool any_found = false;
  for (PostulateId id : ids) {
    for (Measure m : measures) {
      const auto outcome = a.all ? survey(games, label, m, id, options)
                                 : find_counterexample(games, label, m, id, options);
      if (outcome.found) {
        any_found = true;
        std::cout << report_to_json(*outcome.found).dump() << '\n';
      }
      auto footer = summary_to_json(outcome);
      footer["summary"]["postulate"] = to_string(id);
      footer["summary"]["measure"] = to_string(m);
      std::cout << footer.dump() << '\n';
    }
  }
  return any_found ? kFails : kOk;
}

int run_reproduce(const std::string& theorem, const std::string& format) {
  const auto checks = reproduce(theorem);
  bool ok = true;
  auto out = nlohmann::json::array();
  for (const auto& c : checks) {
    ok = ok && c.pass;
    if (format == "json") {
      out.push_back(repro_to_json(c));
    } else {
      std::cout << (c.pass ? "PASS " : "FAIL ") << '[' << c.group << "] " << c.label << ": " << c.actual;
      if (!c.pass) std::cout << " (expected " << c.expected << ')';
      std::cout << '\n';
    }
  }
  if (format == "json") {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (ok ? "all " : "some checks failed; ") << checks.size() << " checks" << (ok ? " match" : "") << '\n';
  }
  return ok ? kOk : kFails;
}

int run_validate(const GameSource& src) {
  const auto game = src.load();
  std::cout << "valid: " << describe(game) << " (n=" << game.players() << ", YES-blockers "
            << describe_coalition(yes_blockers(game)) << ", NO-blockers " << describe_coalition(no_blockers(game))
            << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voting power measures and blocker postulates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "vpower 1.0");
  bool show_kernels = false;
  app.add_flag("--kernels", show_kernels, "print the active bit-table kernel set to stderr");

  const std::vector<std::string> formats{"table", "json", "csv"};
  std::string format = "table";

  GameSource power_src;
  std::vector<std::string> power_measures;
  bool fast = false;
  auto* power = app.add_subcommand("power", "compute power indices");
  power_src.attach(power);
  power->add_option("--measure", power_measures, "pb, ss or rm (repeatable; default all)");
  power->add_option("--format", format)->check(CLI::IsMember(formats));
  power->add_flag("--fast", fast, "weighted-game fast paths for PB and SS");

  GameSource check_src;
  std::vector<std::string> check_postulates, check_measures;
  std::string check_bloc;
  int check_lead = 0;
  std::vector<int> check_pair;
  auto* check = app.add_subcommand("check", "check postulates");
  check_src.attach(check);
  check->add_option("--postulate", check_postulates, "postulate id (repeatable)")->required();
  check->add_option("--measure", check_measures, "pb, ss or rm (repeatable; default all)");
  check->add_option("--bloc", check_bloc, "bloc members, e.g. \"1,2\"");
  check->add_option("--lead", check_lead, "bloc lead (default lowest member)");
  check->add_option("--pair", check_pair, "ordered player pair i j")->expected(2);
  check->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"table", "json"}));

  GameSource bloc_src;
  std::string bloc_members;
  int bloc_lead = 0;
  auto* bloc = app.add_subcommand("bloc", "form a bloc and print the derived game");
  bloc_src.attach(bloc);
  bloc->add_option("--bloc", bloc_members, "bloc members, e.g. \"1,2\"")->required();
  bloc->add_option("--lead", bloc_lead, "bloc lead (default lowest member)");

  GameSource add_src;
  std::string add_kind = "yes";
  auto* add = app.add_subcommand("add-blocker", "append a YES- or NO-blocker and print the game");
  add_src.attach(add);
  add->add_option("kind", add_kind, "yes or no")->check(CLI::IsMember(std::vector<std::string>{"yes", "no"}));

  SearchArgs sargs;
  auto* search = app.add_subcommand("search", "search a game space for postulate violations");
  search->add_option("--space", sargs.space, "exhaustive, grid or random")
      ->check(CLI::IsMember(std::vector<std::string>{"exhaustive", "grid", "random"}));
  search->add_option("--n", sargs.n, "number of players");
  search->add_option("--max-n", sargs.max_n, "search every n from 1 (or --n) up to this");
  search->add_option("--max-weight", sargs.max_weight, "largest weight in grid/random spaces");
  search->add_option("--count", sargs.count, "games drawn by the random space");
  search->add_option("--seed", sargs.seed, "seed for the random space");
  search->add_option("--bloc-cap", sargs.bloc_cap, "largest bloc size tried (default n if n <= 4, else 3)");
  search->add_flag("--all", sargs.all, "survey the whole space instead of stopping at the first violation");
  search->add_option("--measure", sargs.measures, "pb, ss or rm (repeatable; default all)");
  search->add_option("--postulate", sargs.postulates, "postulate id (repeatable)")->required();

  std::string theorem;
  bool all_groups = false;
  auto* repro = app.add_subcommand("reproduce", "recompute the published values and compare exactly");
  auto* theorem_opt = repro->add_option("--theorem", theorem, "1..9, bloc, dictator or efficiency")
                          ->check(CLI::IsMember(reproduce_groups()));
  repro->add_flag("--all", all_groups, "run every group (default)")->excludes(theorem_opt);
  repro->add_option("--format", format)->check(CLI::IsMember(std::vector<std::string>{"table", "json"}));

  GameSource validate_src;
  auto* val = app.add_subcommand("validate", "validate a game");
  validate_src.attach(val);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (show_kernels) std::cerr << "kernels: " << simd::active_kernels().name << '\n';

  try {
    if (*power) return run_power(power_src, power_measures, format, fast);
    if (*check) return run_check(check_src, check_postulates, check_measures, check_bloc, check_lead, check_pair, format);
    if (*bloc) return run_bloc(bloc_src, bloc_members, bloc_lead);
    if (*add) return run_add_blocker(add_src, add_kind);
    if (*search) return run_search(sargs);
    if (*repro) return run_reproduce(theorem, format);
    if (*val) return run_validate(validate_src);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VotingError& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
