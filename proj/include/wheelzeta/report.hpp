#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace wheelzeta {

enum class ReportFormat { kTable, kJson, kCsv };

ReportFormat parse_format(const std::string& name);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// One command's machine-readable result. Serialization is deterministic:
/// keys sorted, exact integers as decimal strings, doubles via "%.12g".
struct Report {
  std::string command;
  std::map<std::string, std::string> parameters;
  nlohmann::json rows = nlohmann::json::array();
  std::vector<Check> checks;
  std::string version;

  bool all_passed() const;
  std::string render(ReportFormat format) const;
  std::string to_json() const;
  std::string to_csv() const;
  std::string to_table() const;
};

/// Fixed 12-significant-digit formatting used everywhere a double is printed.
std::string format_double(double v);

}  // namespace wheelzeta
