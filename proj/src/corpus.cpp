#include <charconv>

#include "vpower/search.hpp"

namespace vpower {

std::vector<NamedGame> reference_corpus() {
  return {
      {"unanimity3", make_unanimity(3), "three-player unanimity rule"},
      {"g_311", make_weighted(3, {2, 1, 1}), "weighted game {3; 2,1,1}: player 1 is a YES-blocker"},
      {"g_11222", make_weighted(2, {1, 1, 2, 2, 2}), "weighted game {2; 1,1,2,2,2}: bloc example"},
      {"g_8_2115", make_weighted(8, {2, 1, 1, 5}), "weighted game {8; 2,1,1,5}: {3; 2,1,1} with an added YES-blocker"},
      {"dictator1", make_dictator(1, 0), "one-player dictator game"},
      {"dictator3", make_dictator(3, 0), "three-player game dictated by player 1"},
      {"unanimity6", make_unanimity(6), "six-player unanimity rule"},
  };
}

namespace {

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

[[noreturn]] void unknown(const std::string& name) {
  throw VotingError(ErrorCode::ParseError, "unknown corpus game '" + name + "'");
}

}  // namespace

SimpleVotingGame corpus_game(const std::string& name) {
  for (auto& entry : reference_corpus()) {
    if (entry.name == name) return entry.game;
  }
  const std::string_view view(name);
  if (view.starts_with("unanimity")) {
    const auto n = parse_int(view.substr(9));
    if (!n || *n < 1 || *n > kMaxRepresentablePlayers) unknown(name);
    return make_unanimity(*n);
  }
  if (view.starts_with("dictator")) {
    auto rest = view.substr(8);
    int d = 1;
    if (const auto us = rest.find('_'); us != std::string_view::npos) {
      const auto parsed = parse_int(rest.substr(us + 1));
      if (!parsed) unknown(name);
      d = *parsed;
      rest = rest.substr(0, us);
    }
    const auto n = parse_int(rest);
    if (!n || *n < 1 || *n > kMaxRepresentablePlayers || d < 1 || d > *n) unknown(name);
    return make_dictator(*n, d - 1);
  }
  unknown(name);
}

}  // namespace vpower
