// SPDX-License-Identifier: Apache-2.0
//
// Order-of-magnitude Monte Carlo for macroscopic objects whose tail copy sits a
// distance d from its dominant counterpart: hit streams, nucleon ejections,
// emitted power and self-absorbed dose.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grwtails/rng.hpp"

namespace grw {

inline constexpr double kJoulePerMeV = 1.602176634e-13;
inline constexpr double kSecondsPerYear = 365.25 * 86400.0;
/// 1 rem = 0.01 J/kg at quality factor 1 (beta radiation).
inline constexpr double kJoulePerKgPerRem = 0.01;
inline constexpr double kNucleonsPerKg = 1e27;
inline constexpr double kDefaultNucleonWidth = 1e-14;
inline constexpr double kDefaultEnergyPerDecayMeV = 1.0;
/// Largest expected event count collapse_event_stream will materialize.
inline constexpr double kMaxExplicitEvents = 1e9;

struct MacroObject {
  double n_nucleons = kNucleonsPerKg;
  double mass = 1.0;               // kg
  double rate_per_nucleon = 1e-16; // 1/s
  double separation = 2.0;         // m
  double nucleon_width = kDefaultNucleonWidth;
  double energy_per_decay = kDefaultEnergyPerDecayMeV;  // MeV
  double collapse_width = 1e-7;    // m

  /// Throws DomainError unless every field is positive and n_nucleons >= 1.
  void validate() const;
  /// Object of `mass` kg holding nucleons_per_kg * mass nucleons, other fields default.
  static MacroObject of_mass(double mass, double nucleons_per_kg = kNucleonsPerKg);

  double collapse_rate() const noexcept { return n_nucleons * rate_per_nucleon; }
  double critical_separation() const;
  double ejection_probability() const;
};

/// One reproduced figure next to its recomputed value.
struct ConsistencyFlag {
  std::string label;
  double paper_value = 0.0;
  double recomputed = 0.0;
  double ratio = 0.0;        // recomputed / paper_value
  bool consistent = false;   // within a factor of 10
  std::string note;
};

struct DecayReport {
  double duration = 0.0;
  std::uint64_t n_collapses = 0;
  std::uint64_t n_ejections = 0;
  double ejection_rate = 0.0;
  double power_mev_per_s = 0.0;
  double power_watts = 0.0;
  double dose_rem_per_year = 0.0;
  double expected_ejection_rate = 0.0;
  double expected_power_mev_per_s = 0.0;
  std::vector<ConsistencyFlag> paper_consistency_flags;
};

/// 1 / (N lambda).
double first_collapse_time_expected(const MacroObject& obj);

/// Homogeneous Poisson event times on [0, duration). Throws GuardError when the
/// expected count exceeds kMaxExplicitEvents.
std::vector<double> collapse_event_stream(const MacroObject& obj, double duration, Rng& rng);

/// min(1, (d / d_crit)^2).
double ejection_probability(double d, double d_crit);

/// Streams hits without storing them; each ejects with probability
/// ejection_probability(d, a^2/w) and deposits energy_per_decay.
DecayReport simulate_decay(const MacroObject& obj, double duration, Rng& rng,
                           double absorbed_fraction = 1.0);

/// `repetitions` independent windows of length `duration` (substream(seed, i)),
/// run concurrently and pooled into one report covering repetitions * duration.
DecayReport simulate_decay_ensemble(const MacroObject& obj, double duration,
                                    std::size_t repetitions, std::uint64_t seed,
                                    double absorbed_fraction = 1.0);

/// Self-absorbed dose in rem/yr for a specific power in W/kg.
double dose_rate(double power_watts_per_kg, double absorbed_fraction);

}  // namespace grw
