#include "vpower/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace vpower {

nlohmann::json report_to_json(const PowerReport& report) {
  auto rows = nlohmann::json::array();
  for (std::size_t p = 0; p < report.players.size(); ++p) {
    const auto& pp = report.players[p];
    rows.push_back({{"player", p + 1},
                    {"measure", to_string(report.measure)},
                    {"total", pp.total.fraction()},
                    {"yes", pp.yes.fraction()},
                    {"no", pp.no.fraction()},
                    {"decimal", std::stod(pp.total.decimal())}});
  }
  return rows;
}

std::string report_to_csv(const PowerReport& report) {
  std::ostringstream os;
  os << "player,measure,total,yes,no,decimal\n";
  for (std::size_t p = 0; p < report.players.size(); ++p) {
    const auto& pp = report.players[p];
    os << p + 1 << ',' << to_string(report.measure) << ',' << pp.total.fraction() << ','
       << pp.yes.fraction() << ',' << pp.no.fraction() << ',' << pp.total.decimal() << '\n';
  }
  return os.str();
}

std::string report_to_table(const PowerReport& report) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "player" << std::setw(6) << "meas" << std::setw(18) << "total"
     << std::setw(18) << "yes" << std::setw(18) << "no" << "decimal\n";
  for (std::size_t p = 0; p < report.players.size(); ++p) {
    const auto& pp = report.players[p];
    os << std::left << std::setw(8) << p + 1 << std::setw(6) << to_string(report.measure)
       << std::setw(18) << pp.total.str() << std::setw(18) << pp.yes.str() << std::setw(18)
       << pp.no.str() << pp.total.decimal() << '\n';
  }
  return os.str();
}

}  // namespace vpower
