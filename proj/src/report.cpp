#include "wheelzeta/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "wheelzeta/errors.hpp"

namespace wheelzeta {

ReportFormat parse_format(const std::string& name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  throw UsageError("unknown format '" + name + "' (use table, json or csv)");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string Report::render(ReportFormat format) const {
  switch (format) {
    case ReportFormat::kJson: return to_json();
    case ReportFormat::kCsv: return to_csv();
    default: return to_table();
  }
}

std::string Report::to_json() const {
  nlohmann::json j;  // nlohmann::json sorts object keys
  j["command"] = command;
  j["parameters"] = parameters;
  j["rows"] = rows;
  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : checks)
    jchecks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = jchecks;
  j["version"] = version;
  return j.dump(2) + "\n";
}

namespace {

std::string cell_to_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::vector<std::string> row_keys(const nlohmann::json& rows) {
  std::set<std::string> keys;
  for (const auto& row : rows)
    for (const auto& [k, _] : row.items()) keys.insert(k);
  return {keys.begin(), keys.end()};
}

}  // namespace

std::string Report::to_csv() const {
  std::ostringstream out;
  nlohmann::json data = rows;
  if (data.empty()) {
    data = nlohmann::json::array();
    for (const auto& c : checks)
      data.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  }
  const auto keys = row_keys(data);
  for (std::size_t i = 0; i < keys.size(); ++i)
    out << (i ? "," : "") << keys[i];
  out << "\n";
  for (const auto& row : data) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out << (i ? "," : "");
      if (row.contains(keys[i])) out << cell_to_string(row[keys[i]]);
    }
    out << "\n";
  }
  return out.str();
}

std::string Report::to_table() const {
  std::ostringstream out;
  out << command;
  for (const auto& [k, v] : parameters) out << "  " << k << "=" << v;
  out << "\n";
  if (!rows.empty()) {
    const auto keys = row_keys(rows);
    std::vector<std::size_t> width(keys.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < keys.size(); ++i)
      width[i] = keys[i].size();
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        std::string c = row.contains(keys[i]) ? cell_to_string(row[keys[i]]) : "";
        width[i] = std::max(width[i], c.size());
        line.push_back(std::move(c));
      }
      cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << (i ? "  " : "");
        out << line[i] << std::string(width[i] - line[i].size(), ' ');
      }
      out << "\n";
    };
    emit(keys);
    for (const auto& line : cells) emit(line);
  }
  for (const auto& c : checks)
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name
        << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  return out.str();
}

}  // namespace wheelzeta
