#pragma once

#include <string>

#include <json.hpp>

#include "vpower/measures.hpp"

namespace vpower {

/// [{"player": 1, "measure": "rm", "total": "p/q", "yes": "p/q", "no": "p/q",
///   "decimal": 0.128125}, ...]
nlohmann::json report_to_json(const PowerReport& report);
/// Same columns, one header line.
std::string report_to_csv(const PowerReport& report);
/// Aligned human-readable table with exact fractions.
std::string report_to_table(const PowerReport& report);

}  // namespace vpower
