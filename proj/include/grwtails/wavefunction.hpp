// SPDX-License-Identifier: Apache-2.0
//
// Single-coordinate wavefunctions on a uniform grid.
//
// Gaussians follow the amplitude convention exp(-(x - c)^2 / 2 w^2): w is the
// 1/sqrt(e) half-width of the amplitude, so |psi|^2 has variance w^2 / 2.
// Quadrature is the rectangle rule sum_i f(x_i) dx, which is what the FFT
// sampling implies. Boundaries are periodic.
#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace grw {

using cplx = std::complex<double>;

/// Reduced Planck constant in J s, for SI-unit evolution.
inline constexpr double kHbarSI = 1.054571817e-34;

class Grid1D {
 public:
  /// Throws DomainError unless x_min < x_max and n_points >= 16.
  Grid1D(double x_min, double x_max, std::size_t n_points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }
  double x(std::size_t i) const noexcept { return x_min_ + static_cast<double>(i) * dx_; }
  bool contains(double x) const noexcept { return x >= x_min_ && x <= x_max_; }
  /// Index of the sample nearest to x, clamped to the grid.
  std::size_t nearest_index(double x) const noexcept;

  bool operator==(const Grid1D&) const = default;

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double dx_;
};

struct GaussianPeak {
  double center;
  double width;
  cplx weight{1.0, 0.0};
};

struct Region {
  double lo;
  double hi;

  /// Throws DomainError unless lo < hi.
  static Region make(double lo, double hi);
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// Complex amplitudes on a Grid1D. Immutable after construction.
class WaveFunction {
 public:
  /// Throws DomainError on size mismatch or non-finite amplitudes.
  WaveFunction(Grid1D grid, std::vector<cplx> amplitudes);

  const Grid1D& grid() const noexcept { return grid_; }
  std::span<const cplx> amplitudes() const noexcept { return amps_; }
  const cplx& operator[](std::size_t i) const noexcept { return amps_[i]; }
  std::size_t size() const noexcept { return amps_.size(); }

  /// Copy scaled so that norm_squared == 1. Throws AnnihilationError on a null state.
  WaveFunction normalized() const;
  WaveFunction scaled(cplx factor) const;

 private:
  Grid1D grid_;
  std::vector<cplx> amps_;
};

/// Un-normalized sum_k weight_k exp(-(x - center_k)^2 / 2 width_k^2) on the grid.
/// Validates resolvability (width >= 3 dx) and centers (inside the grid).
WaveFunction gaussian_sum(const Grid1D& grid, std::span<const GaussianPeak> peaks);

/// gaussian_sum followed by normalization.
WaveFunction make_gaussian_superposition(const Grid1D& grid, std::span<const GaussianPeak> peaks);

double norm_squared(const WaveFunction& wf);

/// Raw moment  int_region x^k |psi|^2 / int_region |psi|^2, for k <= 4.
double moment(const WaveFunction& wf, int k, std::optional<Region> region = std::nullopt);

/// Probability mass inside region (not renormalized by the region).
double tail_mass(const WaveFunction& wf, const Region& region);

/// Local maxima of |psi| above min_rel_height * max|psi|, each refined by a
/// least-squares parabola through log|psi| at the 5 nearest samples. Sorted by
/// descending |weight|; weight is the fitted peak amplitude with the phase of
/// the nearest sample.
std::vector<GaussianPeak> find_peaks(const WaveFunction& wf, double min_rel_height);

struct EvolveResult {
  WaveFunction state;
  /// max boundary |psi| / max |psi| after evolution.
  double boundary_ratio = 0.0;
  std::optional<std::string> warning;
};

/// Boundary amplitude ratio above which evolve_free attaches a leakage warning.
inline constexpr double kLeakageThreshold = 1e-10;

/// Exact free-particle propagation by one split-step Fourier step:
/// psi_k *= exp(-i hbar k^2 dt / 2m). Natural units by default (hbar = 1).
EvolveResult evolve_free(const WaveFunction& wf, double dt, double mass, double hbar = 1.0);

}  // namespace grw
