// SPDX-License-Identifier: Apache-2.0
#include "grwtails/collapse.hpp"

#include <algorithm>
#include <cmath>

#include "grwtails/error.hpp"
#include "grwtails/kernels.hpp"

namespace grw {

CenterSampler::CenterSampler(const WaveFunction& wf, double a) : grid_(wf.grid()) {
  if (!(a > 0.0)) throw DomainError("collapse width must be positive");
  density_ = kernels::smeared_density(grid_, wf.amplitudes(), a);
  cumulative_.resize(density_.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < density_.size(); ++i) {
    acc += density_[i];
    cumulative_[i] = acc;
  }
  if (!(acc > 0.0)) throw AnnihilationError("collapse-centre density vanishes");
  for (auto& c : cumulative_) c /= acc;
  cumulative_.back() = 1.0;
  const double scale = 1.0 / (acc * grid_.dx());
  for (auto& d : density_) d *= scale;
}

double CenterSampler::sample(Rng& rng) const {
  const double u = std::generate_canonical<double, 64>(rng);
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const auto i = static_cast<std::size_t>(
      std::min<std::ptrdiff_t>(it - cumulative_.begin(), cumulative_.size() - 1));
  const double below = i == 0 ? 0.0 : cumulative_[i - 1];
  const double cell = cumulative_[i] - below;
  const double frac = cell > 0.0 ? (u - below) / cell : 0.5;
  return grid_.x(i) + (frac - 0.5) * grid_.dx();
}

double CenterSampler::cdf(double x) const {
  const double dx = grid_.dx();
  const double pos = (x - grid_.x_min()) / dx + 0.5;  // cell i spans [i, i+1) in pos
  if (pos <= 0.0) return 0.0;
  const auto i = static_cast<std::size_t>(pos);
  if (i >= cumulative_.size()) return 1.0;
  const double below = i == 0 ? 0.0 : cumulative_[i - 1];
  return below + (pos - static_cast<double>(i)) * (cumulative_[i] - below);
}

double sample_collapse_center(const WaveFunction& wf, double a, Rng& rng) {
  return CenterSampler(wf, a).sample(rng);
}

CollapseOutcome apply_collapse(const WaveFunction& wf, const CollapseKernel& kernel) {
  auto amps = kernels::apply_kernel(wf.grid(), wf.amplitudes(), kernel);
  WaveFunction hit(wf.grid(), std::move(amps));
  const double weight = norm_squared(hit);
  if (!(weight >= 1e-300)) {
    throw AnnihilationError("collapse annihilated the state (kernel disjoint from its support)");
  }
  return CollapseOutcome{kernel.center, weight, hit.scaled(1.0 / std::sqrt(weight))};
}

CollapseOutcome grw_hit(const WaveFunction& wf, double a, Rng& rng) {
  const double center = sample_collapse_center(wf, a, rng);
  return apply_collapse(wf, CollapseKernel::gaussian(a, center));
}

}  // namespace grw
