// SPDX-License-Identifier: Apache-2.0
#include "grwtails/tail_analytics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "grwtails/collapse.hpp"
#include "grwtails/error.hpp"
#include "grwtails/kernels.hpp"

namespace grw {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << name << " must be positive (got " << v << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

TwoPeakPrediction predict_two_peak_collapse(double w, double a, double x0) {
  require_positive(w, "w");
  require_positive(a, "a");
  const double a2 = a * a;
  const double w2 = w * w;
  TwoPeakPrediction p;
  p.a_prime = std::sqrt(a2 + w2);
  p.w_prime = 1.0 / std::sqrt(1.0 / a2 + 1.0 / w2);
  p.x0_prime = x0 * a2 / (a2 + w2);
  p.exponent_constant = kSuppressionExponentFactor / (a2 + w2);
  p.suppression = std::exp(-p.exponent_constant * x0 * x0);
  return p;
}

TwoPeakPrediction predict_two_peak_approx(double w, double a, double x0) {
  require_positive(w, "w");
  require_positive(a, "a");
  if (!(w < a / 3.0)) {
    std::ostringstream os;
    os << "narrow-peak approximation needs w < a/3 (w = " << w << ", a = " << a << ")";
    throw ValidityError(os.str());
  }
  TwoPeakPrediction p;
  p.a_prime = a;
  p.w_prime = w;
  p.x0_prime = x0 * (1.0 - (w * w) / (a * a));
  p.exponent_constant = kSuppressionExponentFactor / (a * a);
  p.suppression = std::exp(-p.exponent_constant * x0 * x0);
  return p;
}

TailMeasurement measure_tail_displacement(double w, double a, double x0, const Grid1D& grid) {
  require_positive(w, "w");
  require_positive(a, "a");
  if (grid.dx() > w / 10.0) throw ResolutionError("grid must resolve w with dx <= w/10");
  const double lo = std::min(0.0, x0) - 5.0 * w;
  const double hi = std::max(0.0, x0) + 5.0 * w;
  if (grid.x_min() > lo || grid.x_max() < hi) {
    throw DomainError("grid must cover [min(0,x0) - 5w, max(0,x0) + 5w]");
  }

  const std::array peaks{GaussianPeak{0.0, w, 1.0}, GaussianPeak{x0, w, 1.0}};
  const auto state = make_gaussian_superposition(grid, peaks);
  const auto hit = apply_collapse(state, CollapseKernel::gaussian(a, 0.0));
  auto found = find_peaks(hit.post_state, 1e-12);
  if (found.empty()) throw UnmeasurableTailError("no peaks found after the hit");

  // Dominant: the fitted peak nearest the collapse centre.
  const auto dom_it = std::min_element(found.begin(), found.end(), [](const auto& l, const auto& r) {
    return std::abs(l.center) < std::abs(r.center);
  });
  const GaussianPeak dominant = *dom_it;

  TailMeasurement m;
  m.dominant_center = dominant.center;
  m.dominant_width = dominant.width;
  if (x0 == 0.0) {
    m.x0_measured = dominant.center;
    m.suppression_measured = 1.0;
    m.tail_width = dominant.width;
    return m;
  }
  found.erase(dom_it);
  // Tail: the strongest remaining peak on the x0 side.
  const auto tail_it = std::find_if(found.begin(), found.end(), [&](const GaussianPeak& p) {
    return (p.center - dominant.center) * x0 > 0.0;
  });
  if (tail_it == found.end()) throw UnmeasurableTailError("tail peak not resolved");
  const double ratio = std::abs(tail_it->weight) / std::abs(dominant.weight);
  if (ratio < 1e-12) throw UnmeasurableTailError("tail below the 1e-12 fit threshold");
  m.x0_measured = tail_it->center;
  m.suppression_measured = ratio;
  m.tail_width = tail_it->width;
  return m;
}

CompoundSpec CompoundSpec::make(double com_width, double internal_rms, double particle_width) {
  require_positive(com_width, "com_width");
  require_positive(internal_rms, "internal_rms");
  require_positive(particle_width, "particle_width");
  return CompoundSpec{com_width, internal_rms, particle_width};
}

double kick_expectation_numeric(const WaveFunction& relative_wf, double com_width,
                                const CollapseKernel& kernel) {
  require_positive(com_width, "com_width");
  constexpr std::size_t kComPoints = 801;
  const Grid1D com_grid(-8.0 * com_width, 8.0 * com_width, kComPoints);
  std::vector<double> p_com(kComPoints);
  for (std::size_t i = 0; i < kComPoints; ++i) {
    const double u = com_grid.x(i) / com_width;
    p_com[i] = std::exp(-u * u);
  }
  const auto amps = relative_wf.amplitudes();
  std::vector<double> p_r(amps.size());
  for (std::size_t j = 0; j < amps.size(); ++j) p_r[j] = std::norm(amps[j]);

  const auto sums = kernels::kick_sums(relative_wf.grid(), p_r, com_grid, p_com, kernel);
  if (!std::isfinite(sums.log_shift) || !(sums.mass > 0.0)) {
    throw AnnihilationError("collapse kernel does not overlap the compound");
  }
  return sums.r_mass / sums.mass;
}

KickPrediction kick_expectation_linear(const CompoundSpec& spec, const CollapseKernel& kernel,
                                       double collapse_distance) {
  const double x_compound = kernel.center - collapse_distance;
  KickPrediction k;
  k.log_gradient = kernel_log_gradient(kernel, x_compound);
  k.mean_relative_displacement = kKickKappa * k.log_gradient * spec.internal_rms * spec.internal_rms;
  return k;
}

double excitation_threshold(double w, double a) {
  require_positive(w, "w");
  require_positive(a, "a");
  return a * (a / w);
}

}  // namespace grw
