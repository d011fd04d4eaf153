#include "vpower/game_io.hpp"

#include <fstream>
#include <sstream>

namespace vpower {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw VotingError(ErrorCode::ParseError, "malformed game document: " + why);
}

}  // namespace

json game_to_json(const SimpleVotingGame& game) {
  json rule;
  if (const auto* w = game.weighted()) {
    rule["weighted"] = {{"quota", w->quota}, {"weights", w->weights}};
  } else {
    json family = json::array();
    for (Coalition m : game.explicit_rule()->min_winning) {
      json players = json::array();
      for (PlayerId p : members(m)) players.push_back(p + 1);
      family.push_back(std::move(players));
    }
    rule["explicit"] = {{"min_winning", std::move(family)}};
  }
  return {{"n", game.players()}, {"rule", std::move(rule)}};
}

SimpleVotingGame game_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rule")) malformed("expected {\"n\", \"rule\"}");
  if (!doc["n"].is_number_integer()) malformed("\"n\" must be an integer");
  const auto n = doc["n"].get<std::int64_t>();
  if (n < 1 || n > kMaxRepresentablePlayers) malformed("\"n\" out of range");
  const json& rule = doc["rule"];
  if (!rule.is_object() || rule.size() != 1) malformed("\"rule\" must hold exactly one of weighted/explicit");

  if (rule.contains("weighted")) {
    const json& w = rule["weighted"];
    if (!w.is_object() || !w.contains("quota") || !w.contains("weights")) malformed("weighted rule needs quota and weights");
    if (!w["quota"].is_number_integer() || !w["weights"].is_array()) malformed("weighted rule has wrong types");
    std::vector<std::int64_t> weights;
    for (const auto& x : w["weights"]) {
      if (!x.is_number_integer()) malformed("weights must be integers");
      weights.push_back(x.get<std::int64_t>());
    }
    if (static_cast<std::int64_t>(weights.size()) != n) malformed("weights length differs from n");
    return make_weighted(w["quota"].get<std::int64_t>(), std::move(weights));
  }
  if (rule.contains("explicit")) {
    const json& e = rule["explicit"];
    if (!e.is_object() || !e.contains("min_winning") || !e["min_winning"].is_array()) {
      malformed("explicit rule needs a min_winning list");
    }
    std::vector<Coalition> family;
    for (const auto& players : e["min_winning"]) {
      if (!players.is_array()) malformed("each coalition must be a list of players");
      Coalition m = 0;
      for (const auto& p : players) {
        if (!p.is_number_integer()) malformed("player labels must be integers");
        const auto label = p.get<std::int64_t>();
        if (label < 1 || label > n) {
          throw VotingError(ErrorCode::InvalidCoalition, "player label " + std::to_string(label) + " outside 1.." + std::to_string(n));
        }
        m |= bit(static_cast<PlayerId>(label - 1));
      }
      family.push_back(m);
    }
    return make_explicit(static_cast<int>(n), std::move(family));
  }
  malformed("unknown rule kind");
}

SimpleVotingGame load_game(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw VotingError(ErrorCode::ParseError, "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw VotingError(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return game_from_json(doc);
}

void save_game(const std::filesystem::path& path, const SimpleVotingGame& game) {
  std::ofstream out(path);
  if (!out) throw VotingError(ErrorCode::ParseError, "cannot write " + path.string());
  out << game_to_json(game).dump() << '\n';
}

std::string describe_coalition(Coalition s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (PlayerId p : members(s)) {
    os << (first ? "" : ",") << p + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string describe(const SimpleVotingGame& game) {
  std::ostringstream os;
  if (const auto* w = game.weighted()) {
    os << '{' << w->quota << ';';
    for (std::size_t p = 0; p < w->weights.size(); ++p) os << (p == 0 ? " " : ",") << w->weights[p];
    os << '}';
    return os.str();
  }
  os << "n=" << game.players() << " min_winning";
  for (Coalition m : game.explicit_rule()->min_winning) os << ' ' << describe_coalition(m);
  return os.str();
}

}  // namespace vpower
