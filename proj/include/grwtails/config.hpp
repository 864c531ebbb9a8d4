// SPDX-License-Identifier: Apache-2.0
//
// Scenario configuration: flat `key = value` text, one entry per line, `#`
// starts a comment. Reserved keys are `scenario`, `seed`, `units`
// (si | natural) and `output`; every other key is a numeric parameter.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grw {

enum class Scenario {
  TwoPeakCollapse,
  KickExcitation,
  CatDecay,
  KernelCompare,
  SampleCenters,
  FreeSpreading,
};

enum class Units { SI, Natural };

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> scenario_from_string(std::string_view name) noexcept;
std::string_view to_string(Units u) noexcept;

/// One parameter a scenario understands.
struct ParameterSpec {
  std::string name;
  bool required = false;
  std::optional<double> fallback;  // default when absent; nullopt = derived at run time
  bool signed_ok = false;          // may be zero or negative
  std::string description;
};

const std::vector<Scenario>& all_scenarios();
const std::vector<ParameterSpec>& scenario_parameters(Scenario s);

struct ScenarioConfig {
  Scenario scenario = Scenario::TwoPeakCollapse;
  Units units = Units::SI;
  std::map<std::string, double> parameters;
  std::uint64_t seed = 0;
  std::string output_path;

  double get(const std::string& name) const;
  bool has(const std::string& name) const { return parameters.count(name) != 0; }
};

/// Validated config. Throws ConfigError listing every violation with its line
/// or field. When seed_override is set the file may omit `seed`.
ScenarioConfig parse_config(std::string_view text,
                            std::optional<std::uint64_t> seed_override = std::nullopt);

/// Canonical text form; parse_config(to_config_text(c)) == c.
std::string to_config_text(const ScenarioConfig& config);

}  // namespace grw
