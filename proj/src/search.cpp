#include "vpower/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "vpower/game_io.hpp"

namespace vpower {

std::string describe(const GameSpace& space) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExhaustiveMonotone>) {
          os << "ExhaustiveMonotone(n=" << s.n << ")";
        } else if constexpr (std::is_same_v<T, WeightedGrid>) {
          os << "WeightedGrid(n=" << s.n << ", max_weight=" << s.max_weight << ", quota=" << s.quota_min
             << ".." << s.quota_max << ")";
        } else {
          os << "RandomWeighted(n=" << s.n << ", max_weight=" << s.max_weight << ", count=" << s.count
             << ", seed=" << s.seed << ")";
        }
      },
      space);
  return os.str();
}

namespace {

void extend_antichains(int n, Coalition next, std::vector<Coalition>& chosen,
                       std::vector<std::vector<Coalition>>& out) {
  const Coalition end = Coalition{1} << n;
  for (Coalition c = next; c < end; ++c) {
    const bool comparable = std::any_of(chosen.begin(), chosen.end(), [c](Coalition m) {
      return is_subset(m, c) || is_subset(c, m);
    });
    if (comparable) continue;
    chosen.push_back(c);
    out.push_back(chosen);
    extend_antichains(n, c + 1, chosen, out);
    chosen.pop_back();
  }
}

// Unbiased draw in [lo, hi] from the raw engine output, so the sequence does
// not depend on the standard library's distribution implementation.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

[[noreturn]] void too_large(const std::string& what) { throw VotingError(ErrorCode::SpaceTooLarge, what); }

}  // namespace

std::vector<std::vector<Coalition>> monotone_antichains(int n) {
  std::vector<std::vector<Coalition>> out;
  std::vector<Coalition> chosen;
  extend_antichains(n, 1, chosen, out);
  // Members are added in increasing order, so each list is already sorted.
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<SimpleVotingGame> enumerate_games(const GameSpace& space, const SpaceLimits& limits) {
  std::vector<SimpleVotingGame> games;
  if (const auto* ex = std::get_if<ExhaustiveMonotone>(&space)) {
    if (ex->n < 1 || ex->n > limits.max_exhaustive_players) {
      too_large("exhaustive enumeration supports 1.." + std::to_string(limits.max_exhaustive_players) + " players");
    }
    for (auto& family : monotone_antichains(ex->n)) games.push_back(make_explicit(ex->n, std::move(family)));
    return games;
  }
  if (const auto* grid = std::get_if<WeightedGrid>(&space)) {
    if (grid->n < 1 || grid->max_weight < 1) too_large("grid needs n >= 1 and max_weight >= 1");
    double vectors = std::pow(static_cast<double>(grid->max_weight), grid->n);
    if (vectors * static_cast<double>(grid->n * grid->max_weight) > 4.0 * static_cast<double>(limits.max_games)) {
      too_large("weighted grid exceeds the game budget");
    }
    std::vector<std::int64_t> weights(static_cast<std::size_t>(grid->n), 1);
    while (true) {
      const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
      const std::int64_t top = std::min(grid->quota_max, total);
      for (std::int64_t q = std::max<std::int64_t>(1, grid->quota_min); q <= top; ++q) {
        games.push_back(make_weighted(q, weights));
        if (games.size() > limits.max_games) too_large("weighted grid exceeds the game budget");
      }
      int p = grid->n - 1;
      while (p >= 0 && weights[static_cast<std::size_t>(p)] == grid->max_weight) {
        weights[static_cast<std::size_t>(p)] = 1;
        --p;
      }
      if (p < 0) break;
      ++weights[static_cast<std::size_t>(p)];
    }
    return games;
  }
  const auto& rnd = std::get<RandomWeighted>(space);
  if (rnd.n < 1 || rnd.n > kMaxRepresentablePlayers || rnd.max_weight < 1 || rnd.count < 0) {
    too_large("random space needs 1 <= n <= 63, max_weight >= 1, count >= 0");
  }
  if (static_cast<std::size_t>(rnd.count) > limits.max_games) too_large("random space exceeds the game budget");
  std::mt19937_64 rng(rnd.seed);
  while (games.size() < static_cast<std::size_t>(rnd.count)) {
    std::vector<std::int64_t> weights;
    for (int p = 0; p < rnd.n; ++p) weights.push_back(draw(rng, 0, rnd.max_weight));
    const std::int64_t total = std::accumulate(weights.begin(), weights.end(), std::int64_t{0});
    if (total == 0) continue;
    games.push_back(make_weighted(draw(rng, 1, total), std::move(weights)));
  }
  return games;
}

std::vector<BlocSpec> search_blocs(int n, int cap) {
  std::vector<BlocSpec> out;
  const Coalition end = Coalition{1} << n;
  for (int size = 2; size <= std::min(cap, n); ++size) {
    for (Coalition s = 0; s < end; ++s) {
      if (popcount(s) == size) out.push_back({s, std::countr_zero(s)});
    }
  }
  return out;
}

std::vector<std::vector<int>> search_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  if (n <= 4) {
    do {
      out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  out.emplace_back(perm.rbegin(), perm.rend());
  std::rotate(perm.begin(), perm.begin() + 1, perm.end());
  out.push_back(perm);
  return out;
}

void for_each_verdict(const SimpleVotingGame& game, Measure m, PostulateId id, const SearchOptions& options,
                      const std::function<bool(const Verdict&)>& visit) {
  const int n = game.players();
  const auto base = compute_power(game, m, options.limits);
  switch (qualifier_of(id)) {
    case Qualifier::Bloc: {
      const int cap = options.bloc_size_cap > 0 ? options.bloc_size_cap : (n <= 4 ? n : 3);
      for (const auto& bloc : search_blocs(n, cap)) {
        if (!visit(check_bloc(game, m, id, bloc, options.limits, &base))) return;
      }
      return;
    }
    case Qualifier::Pair: {
      const auto bigger = id == PostulateId::ADD2 ? add_no_blocker(game) : add_yes_blocker(game);
      const auto extended = compute_power(bigger, m, options.limits);
      for (PlayerId i = 0; i < n; ++i) {
        for (PlayerId j = 0; j < n; ++j) {
          if (i == j) continue;
          if (!visit(check_add(game, m, id, i, j, options.limits, &base, &extended))) return;
        }
      }
      return;
    }
    case Qualifier::Permutation:
      for (const auto& perm : search_permutations(n)) {
        if (!visit(check_iso(game, m, perm, options.limits, &base))) return;
      }
      return;
    case Qualifier::Game:
      if (id == PostulateId::DUMMY) {
        visit(check_dummy(game, m, options.limits, &base));
      } else {
        visit(check_blocker_power(game, m, id, options.limits, &base));
      }
      return;
  }
}

namespace {

SearchOutcome run(const std::vector<SimpleVotingGame>& games, const std::string& label, Measure m,
                  PostulateId id, const SearchOptions& options, bool stop_at_first) {
  const auto start = std::chrono::steady_clock::now();
  SearchOutcome outcome;
  outcome.space = label;
  auto& stats = outcome.stats;
  for (std::size_t index = 0; index < games.size(); ++index) {
    const auto& game = games[index];
    ++stats.games_tested;
    bool stop = false;
    for_each_verdict(game, m, id, options, [&](const Verdict& v) {
      ++stats.checks;
      switch (v.status) {
        case Status::Holds: ++stats.holds; break;
        case Status::NotApplicable: ++stats.not_applicable; break;
        case Status::Fails:
          ++stats.fails;
          if (!outcome.found) outcome.found = CounterexampleReport{id, m, game, index, v, {}};
          if (stop_at_first) stop = true;
          break;
      }
      return !stop;
    });
    if (stop) break;
  }
  if (outcome.found) outcome.found->stats = stats;
  outcome.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

}  // namespace

SearchOutcome find_counterexample(const std::vector<SimpleVotingGame>& games, const std::string& label,
                                  Measure m, PostulateId id, const SearchOptions& options) {
  return run(games, label, m, id, options, true);
}

SearchOutcome find_counterexample(const GameSpace& space, Measure m, PostulateId id, const SearchOptions& options) {
  return find_counterexample(enumerate_games(space, options.space), describe(space), m, id, options);
}

SearchOutcome survey(const std::vector<SimpleVotingGame>& games, const std::string& label, Measure m,
                     PostulateId id, const SearchOptions& options) {
  return run(games, label, m, id, options, false);
}

namespace {

nlohmann::json stats_to_json(const SearchStats& s) {
  return {{"games_tested", s.games_tested}, {"checks", s.checks}, {"holds", s.holds},
          {"fails", s.fails}, {"not_applicable", s.not_applicable}};
}

}  // namespace

nlohmann::json report_to_json(const CounterexampleReport& report) {
  return {{"postulate", to_string(report.postulate)},
          {"measure", to_string(report.measure)},
          {"game", game_to_json(report.game)},
          {"game_index", report.game_index},
          {"verdict", verdict_to_json(report.verdict)},
          {"stats", stats_to_json(report.stats)}};
}

nlohmann::json summary_to_json(const SearchOutcome& outcome) {
  return {{"summary",
           {{"space", outcome.space},
            {"found", outcome.found.has_value()},
            {"stats", stats_to_json(outcome.stats)},
            {"wall_seconds", outcome.wall_seconds}}}};
}

}  // namespace vpower
