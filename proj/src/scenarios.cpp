// SPDX-License-Identifier: Apache-2.0
#include "grwtails/scenarios.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "grwtails/collapse.hpp"
#include "grwtails/macro_mc.hpp"
#include "grwtails/tail_analytics.hpp"
#include "grwtails/wavefunction.hpp"

namespace grw {
namespace {

QuantityRecord info(std::string name, std::optional<double> predicted,
                    std::optional<double> measured, std::string note = {}) {
  return QuantityRecord{std::move(name), predicted, measured, std::nullopt, std::nullopt,
                        Verdict::Info, std::move(note)};
}

QuantityRecord relative(std::string name, double predicted, double measured, double tol,
                        std::string note = {}) {
  const bool ok = std::abs(measured - predicted) <= tol * std::abs(predicted);
  return QuantityRecord{std::move(name), predicted, measured, std::nullopt, tol,
                        ok ? Verdict::Pass : Verdict::Fail, std::move(note)};
}

QuantityRecord absolute(std::string name, double predicted, double measured, double tol,
                        std::string note = {}) {
  const bool ok = std::abs(measured - predicted) <= tol;
  return QuantityRecord{std::move(name), predicted, measured, std::nullopt, tol,
                        ok ? Verdict::Pass : Verdict::Fail, std::move(note)};
}

bool near(double x, double ref) { return std::abs(x - ref) <= 1e-9 * std::abs(ref); }

double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf) {
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double normal_cdf(double x, double mean, double sd) {
  return 0.5 * std::erfc(-(x - mean) / (sd * std::numbers::sqrt2));
}

// ---------------------------------------------------------------------------

void two_peak_collapse(const ScenarioConfig& c, RunReport& rep) {
  const double w = c.get("w");
  const double a = c.get("a");
  const double x0 = c.get("x0");
  const double lo = c.has("x_min") ? c.get("x_min") : std::min(0.0, x0) - 8.0 * w;
  const double hi = c.has("x_max") ? c.get("x_max") : std::max(0.0, x0) + 8.0 * w;
  const auto n = c.has("grid_points")
                     ? static_cast<std::size_t>(c.get("grid_points"))
                     : static_cast<std::size_t>(std::ceil((hi - lo) / (w / 40.0))) + 1;
  rep.parameters["x_min"] = lo;
  rep.parameters["x_max"] = hi;
  rep.parameters["grid_points"] = static_cast<double>(n);
  const Grid1D grid(lo, hi, n);

  const auto exact = predict_two_peak_collapse(w, a, x0);
  const double a2p = exact.a_prime * exact.a_prime;
  TailMeasurement m;
  try {
    m = measure_tail_displacement(w, a, x0, grid);
  } catch (const UnmeasurableTailError& e) {
    const bool expected = exact.suppression < 1e-12;
    rep.records.push_back(QuantityRecord{"tail suppression", exact.suppression, std::nullopt,
                                         std::nullopt, 1e-12,
                                         expected ? Verdict::Pass : Verdict::Fail, e.what()});
    return;
  }

  rep.records.push_back(relative("tail displacement", exact.x0_prime, m.x0_measured, 5e-3,
                                 "fitted tail-peak centre vs x0 a^2/(a^2+w^2)"));
  if (x0 != 0.0) {
    rep.records.push_back(relative("tail shift toward collapse centre", x0 - exact.x0_prime,
                                   x0 - m.x0_measured, 5e-3, "x0 - x0'"));
    auto frac = info("shift fraction", (x0 - exact.x0_prime) / x0, (x0 - m.x0_measured) / x0,
                     "paper_value is the narrow-peak fraction w^2/a^2");
    frac.paper_value = (w * w) / (a * a);
    rep.records.push_back(frac);
    rep.records.push_back(relative("tail width", exact.w_prime, m.tail_width, 1e-2,
                                   "1/w'^2 = 1/a^2 + 1/w^2"));
  }
  rep.records.push_back(
      relative("dominant width", exact.w_prime, m.dominant_width, 1e-2, "1/w'^2 = 1/a^2 + 1/w^2"));
  rep.records.push_back(absolute("dominant centre", 0.0, m.dominant_center, grid.dx()));

  auto supp = relative("suppression", exact.suppression, m.suppression_measured, 1e-2,
                       "amplitude ratio exp(-x0^2 / 2a'^2); paper_value uses the quoted "
                       "exp(-x0^2 / a'^2)");
  supp.paper_value = std::exp(-kQuotedSuppressionExponentFactor * x0 * x0 / a2p);
  rep.records.push_back(supp);

  if (x0 != 0.0) {
    const double factor = -std::log(m.suppression_measured) * a2p / (x0 * x0);
    auto ef = relative("suppression exponent factor", kSuppressionExponentFactor, factor, 1e-2);
    ef.paper_value = kQuotedSuppressionExponentFactor;
    std::ostringstream os;
    os << "measured exponent is k x0^2 with k = factor / a'^2; quoted form is larger by x"
       << kQuotedSuppressionExponentFactor / factor;
    ef.note = os.str();
    rep.records.push_back(ef);
  }

  if (w < a / 3.0) {
    const auto approx = predict_two_peak_approx(w, a, x0);
    const double gap = std::abs(exact.x0_prime - approx.x0_prime);
    const double bound = 2.0 * std::pow(w / a, 4) * std::abs(x0);
    if (w <= a / 10.0) {
      rep.records.push_back(QuantityRecord{"approximation gap", bound, gap, std::nullopt, bound,
                                           gap <= bound ? Verdict::Pass : Verdict::Fail,
                                           "|x0'exact - x0'approx| <= 2 (w/a)^4 |x0|"});
    } else {
      rep.records.push_back(info("approximation gap", bound, gap, "outside w <= a/10"));
    }
  }
}

// Smallest d with |c'(d)/c(d)| >= 1/w for the Gaussian kernel, by bisection.
double threshold_by_bisection(double w, double a) {
  const auto kernel = CollapseKernel::gaussian(a, 0.0);
  const auto excess = [&](double d) { return std::abs(kernel_log_gradient(kernel, d)) - 1.0 / w; };
  double lo = 0.0;
  double hi = a;
  while (excess(hi) < 0.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void kick_excitation(const ScenarioConfig& c, RunReport& rep) {
  const double w = c.get("w");
  const double a = c.get("a");
  const double d = c.get("d");
  const double com = c.has("com_width") ? c.get("com_width") : w;
  rep.parameters["com_width"] = com;
  const auto n = static_cast<std::size_t>(c.get("grid_points"));

  const double dc = excitation_threshold(w, a);
  auto thr = relative("excitation threshold", dc, threshold_by_bisection(w, a), 1e-12,
                      "a^2/w vs bisection on |c'/c| = 1/w");
  if (near(a, 1e-7) && near(w, 1e-10)) thr.paper_value = 1e-4;
  if (near(a, 1e-7) && near(w, 1e-14)) thr.paper_value = 1.0;
  rep.records.push_back(thr);

  // Relative coordinate: |chi|^2 has standard deviation w, so <r^2> = w^2.
  const Grid1D r_grid(-10.0 * w, 10.0 * w, n);
  const std::array peak{GaussianPeak{0.0, std::numbers::sqrt2 * w, 1.0}};
  const auto chi = make_gaussian_superposition(r_grid, peak);
  const auto spec = CompoundSpec::make(com, w, w);
  const auto kernel = CollapseKernel::gaussian(a, d);

  const double numeric = kick_expectation_numeric(chi, com, kernel);
  const auto linear = kick_expectation_linear(spec, kernel, d);
  if (d * w <= 0.1 * a * a) {
    rep.records.push_back(relative("kick <r>", linear.mean_relative_displacement, numeric, 0.10,
                                   "2D quadrature vs linearized kappa (c'/c) <r^2>"));
  } else {
    rep.records.push_back(info("kick <r>", linear.mean_relative_displacement, numeric,
                               "d w > 0.1 a^2: outside the linearization domain"));
  }
  if (d != 0.0) {
    const bool toward = (numeric > 0.0) == (d > 0.0);
    rep.records.push_back(QuantityRecord{"kick direction", d > 0.0 ? 1.0 : -1.0,
                                         numeric > 0.0 ? 1.0 : -1.0, std::nullopt, std::nullopt,
                                         toward ? Verdict::Pass : Verdict::Fail,
                                         "+1: toward +x; the collapse centre sits at d"});
  }
  const double at_threshold = kick_expectation_linear(spec, kernel, dc).mean_relative_displacement;
  const double ratio = at_threshold / w;
  rep.records.push_back(QuantityRecord{
      "kick at threshold / w", kKickKappa, ratio, std::nullopt, kKickKappa / 2.0,
      (ratio >= kKickKappa / 2.0 && ratio <= 2.0 * kKickKappa) ? Verdict::Pass : Verdict::Fail,
      "linearized kick at d = a^2/w, in [kappa/2, 2 kappa]"});
  rep.records.push_back(info(
      "kick at threshold / w (quadrature)", kKickKappa,
      kick_expectation_numeric(chi, com, CollapseKernel::gaussian(a, dc)) / w));
}

void cat_decay(const ScenarioConfig& c, RunReport& rep) {
  MacroObject obj;
  obj.mass = c.get("mass");
  obj.n_nucleons = c.has("N") ? c.get("N") : obj.mass * kNucleonsPerKg;
  rep.parameters["N"] = obj.n_nucleons;
  obj.rate_per_nucleon = c.get("lambda");
  obj.separation = c.get("d");
  obj.nucleon_width = c.get("w");
  obj.energy_per_decay = c.get("E");
  obj.collapse_width = c.get("a");
  obj.validate();
  const double duration = c.get("duration");
  const auto reps = static_cast<std::size_t>(c.get("repetitions"));
  const double absorbed = c.get("absorbed_fraction");

  const auto r = simulate_decay_ensemble(obj, duration, reps, c.seed, absorbed);
  const double total = r.duration;
  const bool reference = near(obj.mass, 1.0) && near(obj.n_nucleons, 1e27) &&
                         near(obj.rate_per_nucleon, 1e-16) && near(obj.energy_per_decay, 1.0) &&
                         obj.ejection_probability() == 1.0;

  auto first = info("first collapse time", first_collapse_time_expected(obj), std::nullopt,
                    "1/(N lambda)");
  if (near(obj.rate_per_nucleon, 1e-16)) {
    for (const double n_ref : {1e30, 1e28, 1.0}) {
      if (near(obj.n_nucleons, n_ref)) {
        first.paper_value = n_ref == 1e28 ? 1e-12 : 1.0 / (n_ref * 1e-16);
        first.tolerance = 1e-12;
        first.verdict = std::abs(*first.predicted - *first.paper_value) <= 1e-12 * *first.paper_value
                            ? Verdict::Pass
                            : Verdict::Fail;
      }
    }
  }
  rep.records.push_back(first);

  // Counts are Poisson: 3 sigma = 3 sqrt(expected).
  const auto poisson = [&](std::string name, double expected_count, std::uint64_t count,
                           double scale, std::optional<double> quoted, std::string note) {
    QuantityRecord q;
    q.name = std::move(name);
    q.predicted = expected_count * scale;
    q.measured = static_cast<double>(count) * scale;
    q.paper_value = quoted;
    q.note = std::move(note);
    if (expected_count >= 10.0) {
      q.tolerance = 3.0 * std::sqrt(expected_count) * scale;
      q.verdict = std::abs(*q.measured - *q.predicted) <= *q.tolerance ? Verdict::Pass
                                                                       : Verdict::Fail;
    }
    return q;
  };
  const double expected_collapses = obj.collapse_rate() * total;
  const double p = obj.ejection_probability();
  std::optional<double> quoted_rate;
  if (near(obj.n_nucleons, 1e28) && near(obj.rate_per_nucleon, 1e-16)) quoted_rate = 1e12;
  rep.records.push_back(poisson("collapse rate", expected_collapses, r.n_collapses, 1.0 / total,
                                quoted_rate, "1/s, tolerance 3 sigma"));
  rep.records.push_back(info("ejection probability", p, std::nullopt,
                             "min(1, (d/d_c)^2), d_c = a^2/w"));
  if (r.n_collapses > 0 && p < 1.0) {
    const double nc = static_cast<double>(r.n_collapses);
    const double sd = std::sqrt(p * (1.0 - p) / nc);
    const double frac = static_cast<double>(r.n_ejections) / nc;
    if (p * nc >= 10.0) {
      rep.records.push_back(absolute("ejected fraction of hits", p, frac, 3.0 * sd,
                                     "binomial, tolerance 3 sigma"));
    } else {
      rep.records.push_back(info("ejected fraction of hits", p, frac, "too few events"));
    }
  }
  const double expected_ej = expected_collapses * p;
  rep.records.push_back(poisson("ejection rate", expected_ej, r.n_ejections, 1.0 / total,
                                reference ? std::optional(1e11) : std::nullopt,
                                "1/s, tolerance 3 sigma"));
  rep.records.push_back(poisson("power MeV/s", expected_ej, r.n_ejections,
                                obj.energy_per_decay / total,
                                reference ? std::optional(1e11) : std::nullopt,
                                "tolerance 3 sigma"));
  auto watts = info("power W", r.expected_power_mev_per_s * kJoulePerMeV, r.power_watts,
                    "MeV/s x 1.602176634e-13");
  if (reference) {
    watts.paper_value = 1e-8;
    watts.note += "; quoted 1e-8 W is inconsistent with the quoted 1e11 MeV/s by ~1e6";
  }
  rep.records.push_back(watts);
  auto dose = info("dose rem/yr",
                   dose_rate(r.expected_power_mev_per_s * kJoulePerMeV / obj.mass, absorbed),
                   r.dose_rem_per_year, "self-absorbed, quality factor 1");
  if (reference) dose.paper_value = 100.0;
  rep.records.push_back(dose);
  for (const auto& f : r.paper_consistency_flags) {
    auto q = info("flag: " + f.label, f.recomputed, std::nullopt,
                  (f.consistent ? "consistent within x10; " : "INCONSISTENT beyond x10; ") +
                      f.note);
    q.paper_value = f.paper_value;
    rep.records.push_back(q);
  }
}

void kernel_compare(const ScenarioConfig& c, RunReport& rep) {
  const double a = c.get("a");
  const double w = c.has("w") ? c.get("w") : a / 10.0;
  const double x0 = c.has("x0") ? c.get("x0") : 20.0 * a;
  const double cutoff = c.get("cutoff_multiple");
  const bool taper = c.get("taper") != 0.0;
  rep.parameters["w"] = w;
  rep.parameters["x0"] = x0;

  const double lo = -8.0 * w;
  const double hi = x0 + 8.0 * w;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / (w / 20.0))) + 1;
  const Grid1D grid(lo, hi, n);
  const std::array peaks{GaussianPeak{0.0, w, 1.0}, GaussianPeak{x0, w, 1.0}};
  const auto state = make_gaussian_superposition(grid, peaks);

  const auto gauss = apply_collapse(state, CollapseKernel::gaussian(a, 0.0));
  const auto compact = apply_collapse(state, CollapseKernel::compact(a, 0.0, cutoff, taper));
  const double edge = cutoff * a;
  if (!(x0 - 5.0 * w > edge)) {
    rep.warnings.push_back("tail peak is not outside the compact support; erasure not expected");
  }
  const auto tail = Region::make(std::max(edge, x0 - 5.0 * w) * (1.0 + 1e-12), hi);

  const double m_gauss = tail_mass(gauss.post_state, tail);
  const double m_compact = tail_mass(compact.post_state, tail);
  // Tail/dominant mass ratio for equal-width peaks: exp(-x0^2 / a'^2).
  const double r = std::exp(-x0 * x0 / (a * a + w * w));
  const double predicted = r / (1.0 + r);
  rep.records.push_back(QuantityRecord{"residual tail mass (gaussian kernel)", predicted, m_gauss,
                                       std::nullopt, 1e-2,
                                       m_gauss > 0.0 && std::abs(m_gauss - predicted) <=
                                                            1e-2 * predicted
                                           ? Verdict::Pass
                                           : Verdict::Fail,
                                       "strictly positive, equals exp(-x0^2/a'^2)/(1+...)"});
  rep.records.push_back(QuantityRecord{"residual tail mass (compact kernel)", 0.0, m_compact,
                                       std::nullopt, 0.0,
                                       m_compact == 0.0 ? Verdict::Pass : Verdict::Fail,
                                       "exactly zero beyond the cutoff"});
  double diff = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diff = std::max(diff, std::abs(gauss.post_state[i] - compact.post_state[i]));
  }
  rep.records.push_back(info("max |psi_gaussian - psi_compact|", std::nullopt, diff,
                             "effect of the cutoff on the dominant component"));
  rep.records.push_back(info("pre_weight (gaussian)", std::nullopt, gauss.pre_weight));
  rep.records.push_back(info("pre_weight (compact)", std::nullopt, compact.pre_weight));
}

void sample_centers(const ScenarioConfig& c, RunReport& rep) {
  const double w = c.get("w");
  const double a = c.get("a");
  const double x0 = c.get("x0");
  const double tw = c.get("tail_weight");
  const auto draws = static_cast<std::size_t>(c.get("draws"));
  const auto n = static_cast<std::size_t>(c.get("grid_points"));
  const double spread = std::sqrt((w * w + a * a) / 2.0);  // sd of one smeared peak
  const double lo = std::min(0.0, x0) - 12.0 * spread;
  const double hi = std::max(0.0, x0) + 12.0 * spread;
  const Grid1D grid(lo, hi, n);

  std::vector<GaussianPeak> peaks{GaussianPeak{0.0, w, std::sqrt(x0 == 0.0 ? 1.0 : 1.0 - tw)}};
  if (x0 != 0.0) peaks.push_back(GaussianPeak{x0, w, std::sqrt(tw)});
  const auto state = make_gaussian_superposition(grid, peaks);
  const CenterSampler sampler(state, a);
  Rng rng = substream(c.seed, 0);
  std::vector<double> xs(draws);
  for (auto& x : xs) x = sampler.sample(rng);

  const double ks = ks_distance(xs, [&](double x) { return sampler.cdf(x); });
  rep.records.push_back(QuantityRecord{"KS distance to quadrature CDF", 0.0, ks, std::nullopt,
                                       0.02, ks < 0.02 ? Verdict::Pass : Verdict::Fail,
                                       "empirical CDF of drawn centres"});

  // Without overlap the smeared density is a mixture of normals of variance (w^2+a^2)/2.
  const bool separated = x0 == 0.0 || std::abs(x0) > 12.0 * w;
  if (separated) {
    const double wt = x0 == 0.0 ? 0.0 : tw;
    const auto mix = [&](double x) {
      return (1.0 - wt) * normal_cdf(x, 0.0, spread) + wt * normal_cdf(x, x0, spread);
    };
    const double ks_an = ks_distance(xs, mix);
    rep.records.push_back(QuantityRecord{"KS distance to analytic CDF", 0.0, ks_an, std::nullopt,
                                         0.02, ks_an < 0.02 ? Verdict::Pass : Verdict::Fail,
                                         "mixture of normals, variance (w^2 + a^2)/2"});
  }
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(draws);
  const double pred_mean = x0 == 0.0 ? 0.0 : tw * x0;
  const double var_pred = spread * spread + (x0 == 0.0 ? 0.0 : tw * (1.0 - tw) * x0 * x0);
  rep.records.push_back(absolute("mean centre", pred_mean, mean,
                                 3.0 * std::sqrt(var_pred / static_cast<double>(draws)),
                                 "tolerance 3 sigma"));
  if (x0 != 0.0 && separated) {
    const auto near_tail = std::count_if(xs.begin(), xs.end(), [&](double x) {
      return std::abs(x - x0) < std::abs(x);
    });
    const double frac = static_cast<double>(near_tail) / static_cast<double>(draws);
    rep.records.push_back(absolute("fraction nearer x0 peak", tw, frac,
                                   3.0 * std::sqrt(tw * (1.0 - tw) / static_cast<double>(draws)),
                                   "tolerance 3 sigma"));
  }
}

void free_spreading(const ScenarioConfig& c, RunReport& rep) {
  const double w = c.get("w");
  const double dt = c.get("dt");
  const double mass = c.get("mass");
  const auto n = static_cast<std::size_t>(c.get("grid_points"));
  const double hbar = c.units == Units::SI ? kHbarSI : 1.0;
  const double tau = hbar * dt / (mass * w * w);
  const double w_t = w * std::sqrt(1.0 + tau * tau);

  const double half = 14.0 * std::max(w, w_t);
  const Grid1D grid(-half, half, n);
  const std::array peak{GaussianPeak{0.0, w, 1.0}};
  const auto state = make_gaussian_superposition(grid, peak);
  const auto evolved = evolve_free(state, dt, mass, hbar);
  if (evolved.warning) rep.warnings.push_back(*evolved.warning);

  const double mean = moment(evolved.state, 1);
  const double var = moment(evolved.state, 2) - mean * mean;
  rep.records.push_back(relative("packet width", w_t, std::sqrt(2.0 * var), 1e-6,
                                 "w(t) = w sqrt(1 + (hbar t / m w^2)^2)"));
  rep.records.push_back(absolute("norm", 1.0, norm_squared(evolved.state), 1e-10));

  // Hard-truncated packet: support [-w, w].
  std::vector<cplx> cut(state.amplitudes().begin(), state.amplitudes().end());
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(grid.x(i)) > w) cut[i] = 0.0;
  }
  const auto truncated = WaveFunction(grid, std::move(cut)).normalized();
  const auto spread = evolve_free(truncated, dt, mass, hbar).state;
  const double outside = tail_mass(spread, Region::make(-half, -1.5 * w)) +
                         tail_mass(spread, Region::make(1.5 * w, half));
  QuantityRecord q{"mass outside 1.5x truncated support", 1e-12, outside, std::nullopt,
                   std::nullopt, Verdict::Info,
                   "initially exactly zero; must exceed 1e-12 after any dt > 0"};
  if (c.units == Units::Natural) q.verdict = outside > 1e-12 ? Verdict::Pass : Verdict::Fail;
  rep.records.push_back(q);
}

}  // namespace

RunReport run_scenario(const ScenarioConfig& config) {
  RunReport rep;
  rep.scenario = std::string(to_string(config.scenario));
  rep.units = std::string(to_string(config.units));
  rep.seed = config.seed;
  rep.parameters = config.parameters;
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (config.scenario) {
      case Scenario::TwoPeakCollapse: two_peak_collapse(config, rep); break;
      case Scenario::KickExcitation: kick_excitation(config, rep); break;
      case Scenario::CatDecay: cat_decay(config, rep); break;
      case Scenario::KernelCompare: kernel_compare(config, rep); break;
      case Scenario::SampleCenters: sample_centers(config, rep); break;
      case Scenario::FreeSpreading: free_spreading(config, rep); break;
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ScenarioError(rep.scenario + ": " + e.what());
  }
  rep.timing_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<ScenarioConfig> verify_suite(std::uint64_t seed) {
  std::vector<ScenarioConfig> suite;
  const auto add = [&](Scenario s, Units u, std::map<std::string, double> params) {
    std::string text = "scenario = " + std::string(to_string(s)) + "\nunits = " +
                       std::string(to_string(u)) + "\n";
    std::ostringstream os;
    os.precision(17);
    for (const auto& [k, v] : params) os << k << " = " << v << "\n";
    suite.push_back(parse_config(text + os.str(), seed));
  };
  using enum Scenario;
  add(TwoPeakCollapse, Units::Natural,
      {{"w", 1}, {"a", 10}, {"x0", 5}, {"x_min", -20}, {"x_max", 30}, {"grid_points", 8192}});
  for (const double wa : {0.05, 0.1}) {
    for (const double xa : {0.5, 1.0, 2.0, 3.0}) {
      add(TwoPeakCollapse, Units::Natural, {{"w", wa}, {"a", 1}, {"x0", xa}});
    }
  }
  add(KickExcitation, Units::SI, {{"w", 1e-10}, {"d", 1e-5}});
  add(KickExcitation, Units::SI, {{"w", 1e-14}, {"d", 0.1}});
  add(CatDecay, Units::SI, {{"d", 2}, {"duration", 1e-6}, {"repetitions", 16}});
  add(CatDecay, Units::SI, {{"d", 0.01}, {"duration", 2e-5}, {"repetitions", 10}});
  add(CatDecay, Units::SI, {{"d", 2}, {"N", 1e28}, {"duration", 1e-9}, {"repetitions", 100}});
  add(CatDecay, Units::SI, {{"d", 2}, {"N", 1e30}, {"duration", 1e-12}, {"repetitions", 10}});
  add(CatDecay, Units::SI, {{"d", 2}, {"N", 1}, {"duration", 1}, {"repetitions", 1}});
  add(KernelCompare, Units::Natural, {{"a", 1}});
  add(KernelCompare, Units::Natural, {{"a", 1}, {"taper", 1}});
  add(SampleCenters, Units::Natural, {{"w", 0.05}, {"a", 1}});
  add(SampleCenters, Units::Natural, {{"w", 0.05}, {"a", 1}, {"x0", 10}});
  add(SampleCenters, Units::Natural, {{"w", 0.05}, {"a", 1}, {"x0", 10}, {"tail_weight", 0.1}});
  add(FreeSpreading, Units::Natural, {{"w", 1}, {"dt", 1}});
  add(FreeSpreading, Units::Natural, {{"w", 1}, {"dt", 1e-4}});
  return suite;
}

std::vector<RunReport> run_verify(std::uint64_t seed) {
  std::vector<RunReport> out;
  for (const auto& cfg : verify_suite(seed)) out.push_back(run_scenario(cfg));
  return out;
}

std::string describe_scenarios() {
  static const std::map<Scenario, std::string> reports{
      {Scenario::TwoPeakCollapse,
       "tail displacement, tail shift, shift fraction, tail/dominant width, suppression, "
       "suppression exponent factor, approximation gap"},
      {Scenario::KickExcitation,
       "excitation threshold, kick <r> (quadrature vs linear), kick direction, kick at "
       "threshold / w"},
      {Scenario::CatDecay,
       "first collapse time, collapse rate, ejection probability/fraction, ejection rate, "
       "power MeV/s and W, dose rem/yr, consistency flags"},
      {Scenario::KernelCompare, "residual tail mass (gaussian and compact kernels)"},
      {Scenario::SampleCenters, "KS distance (quadrature and analytic CDF), mean centre, "
                                "fraction nearer x0 peak"},
      {Scenario::FreeSpreading, "packet width, norm, mass outside truncated support"},
  };
  std::ostringstream os;
  for (auto s : all_scenarios()) {
    os << to_string(s) << "\n";
    for (const auto& p : scenario_parameters(s)) {
      os << "  " << p.name << (p.required ? " (required)" : "");
      if (p.fallback) os << " [default " << *p.fallback << "]";
      os << "  " << p.description << "\n";
    }
    os << "  reports: " << reports.at(s) << "\n";
  }
  return os.str();
}

}  // namespace grw
