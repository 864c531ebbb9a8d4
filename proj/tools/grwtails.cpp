// SPDX-License-Identifier: Apache-2.0
//
// grwtails run <config> [--seed S] [--out PATH] [--format json|csv]
// grwtails scenarios
// grwtails verify [--seed S] [--out PATH] [--format json|csv]
//
// Exit codes: 0 success, 1 validation error, 2 scenario FAIL, 3 I/O error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "grwtails/config.hpp"
#include "grwtails/error.hpp"
#include "grwtails/report.hpp"
#include "grwtails/scenarios.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kScenarioFail = 2, kIo = 3 };

void deliver(const std::string& bytes, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << bytes;
  } else {
    grw::write_file_atomic(out_path, bytes);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GRW collapse tail laboratory"};
  app.require_subcommand(1);

  const std::map<std::string, grw::ReportFormat> formats{{"json", grw::ReportFormat::Json},
                                                         {"csv", grw::ReportFormat::Csv}};

  auto* run = app.add_subcommand("run", "Run one scenario from a config file");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  grw::ReportFormat format = grw::ReportFormat::Json;
  bool with_timing = false;
  run->add_option("config", config_path, "Scenario config file")->required();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_option("--format", format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  run->add_flag("--with-timing", with_timing, "Include wall time in the JSON report");

  app.add_subcommand("scenarios", "List scenarios and their parameters");

  auto* verify = app.add_subcommand("verify", "Run the built-in reproduction suite");
  std::uint64_t verify_seed = grw::kDefaultVerifySeed;
  verify->add_option("--seed", verify_seed, "Root seed");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("--format", format, "json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  verify->add_flag("--with-timing", with_timing, "Include wall time in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  const grw::EmitOptions opts{with_timing};
  try {
    if (app.got_subcommand("scenarios")) {
      std::cout << grw::describe_scenarios();
      return kOk;
    }
    if (app.got_subcommand("run")) {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot read '" << config_path << "'\n";
        return kIo;
      }
      std::ostringstream text;
      text << in.rdbuf();
      auto cfg = grw::parse_config(text.str(), seed);
      if (out_path.empty()) out_path = cfg.output_path;
      const auto report = grw::run_scenario(cfg);
      deliver(grw::emit_report(report, format, opts), out_path);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      return report.any_fail() ? kScenarioFail : kOk;
    }
    const auto reports = grw::run_verify(verify_seed);
    deliver(grw::emit_reports(reports, format, opts), out_path);
    bool failed = false;
    for (const auto& r : reports) {
      for (const auto& q : r.records) {
        if (q.verdict == grw::Verdict::Fail) {
          std::cerr << "FAIL " << r.scenario << ": " << q.name << "\n";
          failed = true;
        }
      }
    }
    return failed ? kScenarioFail : kOk;
  } catch (const grw::ConfigError& e) {
    for (const auto& issue : e.issues()) std::cerr << "config error: " << issue << "\n";
    return kValidation;
  } catch (const grw::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const grw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
