#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vpower/game.hpp"

namespace vpower {

// Game files are JSON with 1-based player labels:
//   {"n": 3, "rule": {"weighted": {"quota": 3, "weights": [2,1,1]}}}
//   {"n": 3, "rule": {"explicit": {"min_winning": [[1,2],[1,3]]}}}

nlohmann::json game_to_json(const SimpleVotingGame& game);
/// Throws VotingError: ParseError for malformed documents, or the
/// validation error for well-formed but invalid games.
SimpleVotingGame game_from_json(const nlohmann::json& doc);

SimpleVotingGame load_game(const std::filesystem::path& path);
void save_game(const std::filesystem::path& path, const SimpleVotingGame& game);

/// Compact human form: "{3; 2,1,1}" or "n=3 {1,2} {1,3}".
std::string describe(const SimpleVotingGame& game);
/// "{1,3}" with 1-based labels.
std::string describe_coalition(Coalition s);

}  // namespace vpower
