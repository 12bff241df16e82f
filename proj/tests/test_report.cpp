#include <doctest.h>

#include "wheelzeta/errors.hpp"
#include "wheelzeta/report.hpp"

using namespace wheelzeta;

TEST_CASE("format parsing") {
  CHECK(parse_format("table") == ReportFormat::kTable);
  CHECK(parse_format("json") == ReportFormat::kJson);
  CHECK(parse_format("csv") == ReportFormat::kCsv);
  CHECK_THROWS_AS(parse_format("yaml"), UsageError);
}

TEST_CASE("fixed double formatting") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(13867.7342011112) == "13867.7342011");
}

TEST_CASE("report rendering is deterministic") {
  Report r;
  r.command = "demo";
  r.version = "0.1.0";
  r.parameters["b"] = "2";
  r.parameters["a"] = "1";
  r.rows.push_back({{"x", "1"}, {"y", "2"}});
  r.rows.push_back({{"y", "4"}, {"x", "3"}});
  r.checks.push_back({"always", true, ""});

  CHECK(r.to_json() == r.to_json());
  CHECK(r.all_passed());

  // json keys come out sorted
  const std::string j = r.to_json();
  CHECK(j.find("\"checks\"") < j.find("\"command\""));
  CHECK(j.find("\"command\"") < j.find("\"parameters\""));
  CHECK(j.find("\"parameters\"") < j.find("\"rows\""));

  // csv: header line first, one line per row
  const std::string csv = r.to_csv();
  CHECK(csv == "x,y\n1,2\n3,4\n");

  r.checks.push_back({"broken", false, "detail"});
  CHECK_FALSE(r.all_passed());
  CHECK(r.to_table().find("FAIL  broken") != std::string::npos);
}
