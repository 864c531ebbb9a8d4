// SPDX-License-Identifier: Apache-2.0
#include "grwtails/macro_mc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "grwtails/error.hpp"
#include "grwtails/kernels.hpp"
#include "grwtails/tail_analytics.hpp"

namespace grw {
namespace {

// Reference figures for one kilogram in the saturated regime at 1 MeV per decay.
constexpr double kQuotedPowerMeVPerS = 1e11;
constexpr double kQuotedPowerWatts = 1e-8;
constexpr double kQuotedDoseRemPerYear = 100.0;

ConsistencyFlag make_flag(std::string label, double quoted, double recomputed, std::string note) {
  ConsistencyFlag f{std::move(label), quoted, recomputed, recomputed / quoted, false,
                    std::move(note)};
  f.consistent = f.ratio >= 0.1 && f.ratio <= 10.0;
  return f;
}

std::vector<ConsistencyFlag> consistency_flags(const MacroObject& obj, double absorbed_fraction) {
  // Per kilogram, saturated separation: the configuration the quoted figures describe.
  const double mev_per_s =
      obj.n_nucleons / obj.mass * obj.rate_per_nucleon * obj.energy_per_decay;
  const double watts = mev_per_s * kJoulePerMeV;
  std::vector<ConsistencyFlag> flags;
  flags.push_back(make_flag("power_mev_per_s_per_kg_saturated", kQuotedPowerMeVPerS, mev_per_s,
                            "quoted 1e11 MeV/s for 1 kg, 1 MeV per decay"));
  auto w = make_flag("power_watts_per_kg_saturated", kQuotedPowerWatts, watts,
                     "quoted 1e-8 W alongside 1e11 MeV/s");
  if (!w.consistent) {
    std::ostringstream os;
    os << "quoted 1e-8 W disagrees with the quoted 1e11 MeV/s (= "
       << kQuotedPowerMeVPerS * kJoulePerMeV
       << " W) by ~1e6; it matches 1e11 eV/s instead";
    w.note = os.str();
  }
  flags.push_back(std::move(w));
  flags.push_back(make_flag("dose_rem_per_year_saturated", kQuotedDoseRemPerYear,
                            dose_rate(watts, absorbed_fraction),
                            "dose from the recomputed power"));
  flags.push_back(make_flag("dose_rem_per_year_from_quoted_watts", kQuotedDoseRemPerYear,
                            dose_rate(kQuotedPowerWatts, absorbed_fraction),
                            "dose from the quoted 1e-8 W/kg"));
  return flags;
}

void check_guard(double expected) {
  if (expected > kMaxExplicitEvents) {
    std::ostringstream os;
    os << "expected " << expected << " events exceeds the explicit-stream guard of "
       << kMaxExplicitEvents << "; use the expected-count figures (expected_* fields)";
    throw GuardError(os.str());
  }
}

DecayReport finish(const MacroObject& obj, double duration, std::uint64_t collapses,
                   std::uint64_t ejections, double absorbed_fraction) {
  DecayReport r;
  r.duration = duration;
  r.n_collapses = collapses;
  r.n_ejections = ejections;
  r.ejection_rate = duration > 0.0 ? static_cast<double>(ejections) / duration : 0.0;
  r.power_mev_per_s = r.ejection_rate * obj.energy_per_decay;
  r.power_watts = r.power_mev_per_s * kJoulePerMeV;
  r.dose_rem_per_year = dose_rate(r.power_watts / obj.mass, absorbed_fraction);
  r.expected_ejection_rate = obj.collapse_rate() * obj.ejection_probability();
  r.expected_power_mev_per_s = r.expected_ejection_rate * obj.energy_per_decay;
  r.paper_consistency_flags = consistency_flags(obj, absorbed_fraction);
  return r;
}

void check_absorbed(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw DomainError("absorbed_fraction must lie in [0, 1]");
}

}  // namespace

void MacroObject::validate() const {
  const double fields[] = {n_nucleons,     mass,           rate_per_nucleon, separation,
                           nucleon_width, energy_per_decay, collapse_width};
  for (double v : fields) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("macro object fields must be positive");
  }
  if (n_nucleons < 1.0) throw DomainError("n_nucleons must be >= 1");
}

MacroObject MacroObject::of_mass(double mass, double nucleons_per_kg) {
  MacroObject o;
  o.mass = mass;
  o.n_nucleons = mass * nucleons_per_kg;
  o.validate();
  return o;
}

double MacroObject::critical_separation() const {
  return excitation_threshold(nucleon_width, collapse_width);
}

double MacroObject::ejection_probability() const {
  return grw::ejection_probability(separation, critical_separation());
}

double first_collapse_time_expected(const MacroObject& obj) {
  obj.validate();
  return 1.0 / obj.collapse_rate();
}

std::vector<double> collapse_event_stream(const MacroObject& obj, double duration, Rng& rng) {
  obj.validate();
  if (!(duration >= 0.0)) throw DomainError("duration must be non-negative");
  const double rate = obj.collapse_rate();
  check_guard(rate * duration);
  std::vector<double> times;
  if (duration == 0.0) return times;
  times.reserve(static_cast<std::size_t>(rate * duration * 1.1) + 16);
  std::exponential_distribution<double> wait(rate);
  for (double t = wait(rng); t < duration; t += wait(rng)) times.push_back(t);
  return times;
}

double ejection_probability(double d, double d_crit) {
  if (!(d >= 0.0) || !(d_crit > 0.0)) throw DomainError("need d >= 0 and d_crit > 0");
  const double q = d / d_crit;
  return std::min(1.0, q * q);
}

DecayReport simulate_decay(const MacroObject& obj, double duration, Rng& rng,
                           double absorbed_fraction) {
  obj.validate();
  check_absorbed(absorbed_fraction);
  if (!(duration >= 0.0)) throw DomainError("duration must be non-negative");
  const double rate = obj.collapse_rate();
  check_guard(rate * duration);
  const double p = obj.ejection_probability();
  std::uint64_t collapses = 0;
  std::uint64_t ejections = 0;
  if (duration > 0.0) {
    std::exponential_distribution<double> wait(rate);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (double t = wait(rng); t < duration; t += wait(rng)) {
      ++collapses;
      if (unit(rng) < p) ++ejections;
    }
  }
  return finish(obj, duration, collapses, ejections, absorbed_fraction);
}

DecayReport simulate_decay_ensemble(const MacroObject& obj, double duration,
                                    std::size_t repetitions, std::uint64_t seed,
                                    double absorbed_fraction) {
  obj.validate();
  check_absorbed(absorbed_fraction);
  if (!(duration >= 0.0)) throw DomainError("duration must be non-negative");
  if (repetitions == 0) throw DomainError("repetitions must be >= 1");
  check_guard(obj.collapse_rate() * duration);
  const auto tallies = kernels::event_ensemble(obj.collapse_rate(), duration,
                                               obj.ejection_probability(), repetitions, seed);
  std::uint64_t collapses = 0;
  std::uint64_t ejections = 0;
  for (const auto& t : tallies) {
    collapses += t.collapses;
    ejections += t.ejections;
  }
  return finish(obj, duration * static_cast<double>(repetitions), collapses, ejections,
                absorbed_fraction);
}

double dose_rate(double power_watts_per_kg, double absorbed_fraction) {
  check_absorbed(absorbed_fraction);
  if (!(power_watts_per_kg >= 0.0)) throw DomainError("power must be non-negative");
  return power_watts_per_kg * absorbed_fraction * kSecondsPerYear / kJoulePerKgPerRem;
}

}  // namespace grw
