// SPDX-License-Identifier: Apache-2.0
#include "grwtails/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "grwtails/collapse.hpp"
#include "grwtails/error.hpp"

namespace grw {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

bool valid_key(std::string_view k) {
  if (k.empty()) return false;
  return std::all_of(k.begin(), k.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0.0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_seed(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

ParameterSpec req(std::string name, std::string desc, bool signed_ok = false) {
  return ParameterSpec{std::move(name), true, std::nullopt, signed_ok, std::move(desc)};
}
ParameterSpec opt(std::string name, std::optional<double> fallback, std::string desc,
                  bool signed_ok = false) {
  return ParameterSpec{std::move(name), false, fallback, signed_ok, std::move(desc)};
}

std::vector<ParameterSpec> common() {
  return {opt("a", kDefaultCollapseWidth, "collapse width a"),
          opt("lambda", kDefaultRatePerNucleon, "hit rate per nucleon (1/s)")};
}

std::vector<ParameterSpec> with_common(std::vector<ParameterSpec> own) {
  auto out = common();
  out.insert(out.end(), own.begin(), own.end());
  return out;
}

// Parameters known to any scenario; sign rules apply even where unused.
const std::set<std::string>& known_parameters() {
  static const std::set<std::string> names = [] {
    std::set<std::string> n;
    for (auto s : all_scenarios()) {
      for (const auto& p : scenario_parameters(s)) n.insert(p.name);
    }
    return n;
  }();
  return names;
}

bool signed_in(Scenario s, const std::string& name) {
  for (const auto& p : scenario_parameters(s)) {
    if (p.name == name) return p.signed_ok;
  }
  return false;
}

}  // namespace

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::TwoPeakCollapse: return "two-peak-collapse";
    case Scenario::KickExcitation: return "kick-excitation";
    case Scenario::CatDecay: return "cat-decay";
    case Scenario::KernelCompare: return "kernel-compare";
    case Scenario::SampleCenters: return "sample-centers";
    case Scenario::FreeSpreading: return "free-spreading";
  }
  return "unknown";
}

std::optional<Scenario> scenario_from_string(std::string_view name) noexcept {
  for (auto s : all_scenarios()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Units u) noexcept { return u == Units::SI ? "si" : "natural"; }

const std::vector<Scenario>& all_scenarios() {
  static const std::vector<Scenario> all{Scenario::TwoPeakCollapse, Scenario::KickExcitation,
                                         Scenario::CatDecay,        Scenario::KernelCompare,
                                         Scenario::SampleCenters,   Scenario::FreeSpreading};
  return all;
}

const std::vector<ParameterSpec>& scenario_parameters(Scenario s) {
  static const std::map<Scenario, std::vector<ParameterSpec>> table{
      {Scenario::TwoPeakCollapse,
       with_common({req("w", "peak width"),
                    req("x0", "tail peak position (collapse centre at 0)", true),
                    opt("x_min", std::nullopt, "grid lower bound (default min(0,x0) - 8w)", true),
                    opt("x_max", std::nullopt, "grid upper bound (default max(0,x0) + 8w)", true),
                    opt("grid_points", std::nullopt, "grid size (default: dx = w/40)")})},
      {Scenario::KickExcitation,
       with_common({req("w", "compound width; <r^2> = w^2"),
                    req("d", "distance from compound COM to collapse centre", true),
                    opt("com_width", std::nullopt, "COM packet width (default w)"),
                    opt("grid_points", 1025.0, "relative-coordinate grid size")})},
      {Scenario::CatDecay,
       with_common({req("d", "tail-to-dominant separation (m)"),
                    opt("mass", 1.0, "object mass (kg)"),
                    opt("N", std::nullopt, "nucleon count (default 1e27 per kg)"),
                    opt("w", 1e-14, "nucleon width (m)"),
                    opt("E", 1.0, "energy per ejection (MeV)"),
                    opt("duration", 1e-5, "window length per repetition (s)"),
                    opt("repetitions", 16.0, "independent windows"),
                    opt("absorbed_fraction", 1.0, "fraction of emitted energy absorbed")})},
      {Scenario::KernelCompare,
       with_common({opt("w", std::nullopt, "peak width (default a/10)"),
                    opt("x0", std::nullopt, "tail peak position (default 20a)"),
                    opt("cutoff_multiple", 10.0, "compact kernel cutoff in units of a"),
                    opt("taper", 0.0, "1 to taper the compact kernel edge", true)})},
      {Scenario::SampleCenters,
       with_common({req("w", "peak width"),
                    opt("x0", 0.0, "second peak position (0 = single peak)", true),
                    opt("tail_weight", 0.5, "probability weight of the x0 peak"),
                    opt("draws", 1e5, "number of sampled centres"),
                    opt("grid_points", 4096.0, "grid size")})},
      {Scenario::FreeSpreading,
       with_common({req("w", "initial packet width"), req("dt", "evolution time"),
                    opt("mass", 1.0, "particle mass"),
                    opt("grid_points", 4096.0, "grid size")})},
  };
  return table.at(s);
}

double ScenarioConfig::get(const std::string& name) const {
  const auto it = parameters.find(name);
  if (it == parameters.end()) throw DomainError("parameter '" + name + "' not set");
  return it->second;
}

ScenarioConfig parse_config(std::string_view text, std::optional<std::uint64_t> seed_override) {
  std::vector<std::string> issues;
  ScenarioConfig cfg;
  std::optional<Scenario> scenario;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::pair<double, std::size_t>> numbers;  // value, line
  std::set<std::string> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const std::string where = "line " + std::to_string(line_no) + ": ";
    const auto eq = line.find('=');
    if (eq == line.npos) {
      issues.push_back(where + "expected 'key = value'");
      continue;
    }
    const std::string key(trim(line.substr(0, eq)));
    const auto value = trim(line.substr(eq + 1));
    if (!valid_key(key)) {
      issues.push_back(where + "malformed key");
      continue;
    }
    if (!seen.insert(key).second) {
      issues.push_back(where + "duplicate key '" + key + "'");
      continue;
    }
    if (value.empty()) {
      issues.push_back(where + "missing value for '" + key + "'");
      continue;
    }
    if (key == "scenario") {
      scenario = scenario_from_string(value);
      if (!scenario) issues.push_back(where + "unknown scenario '" + std::string(value) + "'");
    } else if (key == "seed") {
      seed = parse_seed(value);
      if (!seed) issues.push_back(where + "seed must be a non-negative 64-bit integer");
    } else if (key == "units") {
      if (value == "si") {
        cfg.units = Units::SI;
      } else if (value == "natural") {
        cfg.units = Units::Natural;
      } else {
        issues.push_back(where + "units must be 'si' or 'natural'");
      }
    } else if (key == "output") {
      cfg.output_path = std::string(value);
    } else if (known_parameters().count(key) == 0) {
      issues.push_back(where + "unknown key '" + key + "'");
    } else if (const auto v = parse_number(value)) {
      numbers[key] = {*v, line_no};
    } else {
      issues.push_back(where + "parameter '" + key + "' is not a finite number");
    }
  }

  if (seed_override) seed = seed_override;
  if (!seed && !seen.count("seed")) issues.push_back("missing required key 'seed'");
  if (!scenario && !seen.count("scenario")) issues.push_back("missing required key 'scenario'");

  if (scenario) {
    for (const auto& [name, entry] : numbers) {
      if (!signed_in(*scenario, name) && !(entry.first > 0.0)) {
        issues.push_back("line " + std::to_string(entry.second) + ": parameter '" + name +
                         "' must be positive for " + std::string(to_string(*scenario)));
      }
    }
    for (const auto& spec : scenario_parameters(*scenario)) {
      const auto it = numbers.find(spec.name);
      if (it != numbers.end()) {
        cfg.parameters[spec.name] = it->second.first;
      } else if (spec.required) {
        issues.push_back("missing required parameter '" + spec.name + "' for " +
                         std::string(to_string(*scenario)));
      } else if (spec.fallback) {
        cfg.parameters[spec.name] = *spec.fallback;
      }
    }
    for (const char* integral : {"grid_points", "repetitions", "draws"}) {
      const auto it = cfg.parameters.find(integral);
      if (it != cfg.parameters.end() && it->second != std::floor(it->second)) {
        issues.push_back(std::string("parameter '") + integral + "' must be an integer");
      }
    }
    if (const auto it = cfg.parameters.find("grid_points");
        it != cfg.parameters.end() && it->second < 16) {
      issues.push_back("parameter 'grid_points' must be >= 16");
    }
    if (const auto it = cfg.parameters.find("absorbed_fraction");
        it != cfg.parameters.end() && it->second > 1.0) {
      issues.push_back("parameter 'absorbed_fraction' must be <= 1");
    }
    if (const auto it = cfg.parameters.find("tail_weight");
        it != cfg.parameters.end() && it->second >= 1.0) {
      issues.push_back("parameter 'tail_weight' must be < 1");
    }
    if (const auto it = cfg.parameters.find("cutoff_multiple");
        it != cfg.parameters.end() && it->second < 3.0) {
      issues.push_back("parameter 'cutoff_multiple' must be >= 3");
    }
  }

  if (!issues.empty()) throw ConfigError(std::move(issues));
  cfg.scenario = *scenario;
  cfg.seed = *seed;
  return cfg;
}

std::string to_config_text(const ScenarioConfig& config) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "scenario = " << to_string(config.scenario) << "\n";
  os << "seed = " << config.seed << "\n";
  os << "units = " << to_string(config.units) << "\n";
  if (!config.output_path.empty()) os << "output = " << config.output_path << "\n";
  for (const auto& [k, v] : config.parameters) os << k << " = " << v << "\n";
  return os.str();
}

}  // namespace grw
