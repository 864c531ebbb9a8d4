// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grwtails/config.hpp"
#include "grwtails/error.hpp"
#include "grwtails/report.hpp"

namespace grw {

/// A module error raised while running a scenario, prefixed with the scenario name.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// Deterministic for a fixed config: repetitions use substream(seed, index).
RunReport run_scenario(const ScenarioConfig& config);

/// Configurations of the built-in reproduction suite.
std::vector<ScenarioConfig> verify_suite(std::uint64_t seed);

/// Runs verify_suite(seed) in order.
std::vector<RunReport> run_verify(std::uint64_t seed);

inline constexpr std::uint64_t kDefaultVerifySeed = 20080623;

/// Human-readable list of scenarios, their parameters and the quantities each reports.
std::string describe_scenarios();

}  // namespace grw
