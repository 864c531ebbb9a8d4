// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "grwtails/error.hpp"
#include "grwtails/report.hpp"
#include "grwtails/scenarios.hpp"

using namespace grw;

namespace {

RunReport sample_report() {
  RunReport r;
  r.scenario = "two-peak-collapse";
  r.units = "natural";
  r.seed = 123;
  r.parameters = {{"a", 10.0}, {"w", 1.0}, {"x0", 5.0}};
  r.records.push_back({"tail displacement", 4.9504950495049505, 4.95049, std::nullopt, 5e-3,
                       Verdict::Pass, "relative"});
  r.records.push_back({"suppression", 0.8836, std::nullopt, 0.78, 1e-2, Verdict::Info, ""});
  r.records.push_back({"odd, \"quoted\" name", std::nullopt, 1e-300, std::nullopt, std::nullopt,
                       Verdict::Fail, "commas, here"});
  r.warnings.push_back("something mild");
  return r;
}

}  // namespace

TEST_CASE("JSON round trip is lossless") {
  const auto r = sample_report();
  const auto text = emit_report(r, ReportFormat::Json);
  CHECK(parse_report_json(text) == r);
  CHECK(text.find("timing") == std::string::npos);
  CHECK(emit_report(r, ReportFormat::Json, {true}).find("timing") != std::string::npos);
}

TEST_CASE("CSV has a header and one line per record") {
  const auto csv = emit_report(sample_report(), ReportFormat::Csv);
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "name,predicted,measured,paper_value,tolerance,verdict");
  CHECK(lines[3].rfind("\"odd, \"\"quoted\"\" name\"", 0) == 0);
  CHECK(lines[3].substr(lines[3].size() - 4) == "FAIL");
}

TEST_CASE("any_fail") {
  auto r = sample_report();
  CHECK(r.any_fail());
  r.records.pop_back();
  CHECK_FALSE(r.any_fail());
}

TEST_CASE("scenario runs are byte-identical for a fixed seed") {
  ScenarioConfig c;
  c.scenario = Scenario::SampleCenters;
  c.units = Units::Natural;
  c.seed = 5;
  c.parameters = {{"a", 1.0}, {"lambda", 1e-16}, {"w", 0.2}, {"x0", 3.0}, {"tail_weight", 0.3},
                  {"draws", 2e4}, {"grid_points", 2048}};
  const auto a = emit_report(run_scenario(c), ReportFormat::Json);
  const auto b = emit_report(run_scenario(c), ReportFormat::Json);
  CHECK(a == b);
  c.seed = 6;
  CHECK(emit_report(run_scenario(c), ReportFormat::Json) != a);
}

TEST_CASE("atomic write replaces the file and reports I/O failures") {
  const auto dir = std::filesystem::temp_directory_path() / "grwtails_report_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.json").string();
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  CHECK(content == "second");
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(write_file_atomic("/nonexistent-dir/x/out.json", "x"), IoError);
}
