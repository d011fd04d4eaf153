#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace vpower {

/// One published value recomputed from scratch.
struct ReproCheck {
  std::string group;
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Group ids accepted by reproduce(): "1".."9" for the nine published
/// results on blocker postulates (PB, SS, RM for subadditivity, minimum
/// power and added blockers, in that order), then "bloc", "dictator" and
/// "efficiency".
const std::vector<std::string>& reproduce_groups();

/// Runs the checks of one group, or every group when `group` is empty.
/// Throws std::invalid_argument for an unknown group.
std::vector<ReproCheck> reproduce(const std::string& group = {});

nlohmann::json repro_to_json(const ReproCheck& check);

}  // namespace vpower
