// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "grwtails/kernel.hpp"
#include "grwtails/rng.hpp"
#include "grwtails/wavefunction.hpp"

namespace grw {

/// GRW rate per nucleon (1/s) and localization width (m) used when not configured.
inline constexpr double kDefaultCollapseWidth = 1e-7;
inline constexpr double kDefaultRatePerNucleon = 1e-16;

struct CollapseOutcome {
  double center = 0.0;
  /// ||c psi||^2 before renormalization.
  double pre_weight = 0.0;
  WaveFunction post_state;
};

/// Collapse-centre distribution p(x0) ∝ ∫ c^2(x - x0) |psi(x)|^2 dx tabulated on the
/// wavefunction's grid. Each grid point owns a cell of width dx; draws are
/// uniform within the chosen cell.
class CenterSampler {
 public:
  CenterSampler(const WaveFunction& wf, double a);

  double sample(Rng& rng) const;
  /// CDF of the tabulated distribution at x (piecewise linear across cells).
  double cdf(double x) const;
  const std::vector<double>& density() const noexcept { return density_; }
  const Grid1D& grid() const noexcept { return grid_; }

 private:
  Grid1D grid_;
  std::vector<double> density_;  // normalized so sum * dx == 1
  std::vector<double> cumulative_;  // cumulative_[i] = mass of cells [0, i]
};

double sample_collapse_center(const WaveFunction& wf, double a, Rng& rng);

/// post_state = c psi renormalized. Throws AnnihilationError when ||c psi||^2 < 1e-300.
CollapseOutcome apply_collapse(const WaveFunction& wf, const CollapseKernel& kernel);

/// Sample a centre, then apply a Gaussian kernel of width a there.
CollapseOutcome grw_hit(const WaveFunction& wf, double a, Rng& rng);

}  // namespace grw
