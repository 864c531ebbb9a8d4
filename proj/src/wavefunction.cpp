// SPDX-License-Identifier: Apache-2.0
#include "grwtails/wavefunction.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "grwtails/error.hpp"
#include "grwtails/kernels.hpp"

namespace grw {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points), dx_(0.0) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw DomainError("grid requires finite x_min < x_max");
  }
  if (n_points < 16) throw DomainError("grid requires at least 16 points");
  dx_ = (x_max - x_min) / static_cast<double>(n_points - 1);
  if (!(dx_ > 0.0)) throw DomainError("grid spacing underflows");
}

std::size_t Grid1D::nearest_index(double x) const noexcept {
  const double f = std::round((x - x_min_) / dx_);
  if (!(f > 0.0)) return 0;
  return std::min(n_ - 1, static_cast<std::size_t>(f));
}

Region Region::make(double lo, double hi) {
  if (!(lo < hi)) throw DomainError("region requires lo < hi");
  return Region{lo, hi};
}

WaveFunction::WaveFunction(Grid1D grid, std::vector<cplx> amplitudes)
    : grid_(grid), amps_(std::move(amplitudes)) {
  if (amps_.size() != grid_.size()) {
    throw DomainError("amplitude count does not match the grid");
  }
  for (const auto& z : amps_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("wavefunction amplitudes must be finite");
    }
  }
}

WaveFunction WaveFunction::normalized() const {
  const double n2 = norm_squared(*this);
  if (!(n2 > 1e-300)) throw AnnihilationError("cannot normalize a null wavefunction");
  return scaled(1.0 / std::sqrt(n2));
}

WaveFunction WaveFunction::scaled(cplx factor) const {
  std::vector<cplx> out(amps_);
  for (auto& z : out) z *= factor;
  return WaveFunction(grid_, std::move(out));
}

WaveFunction gaussian_sum(const Grid1D& grid, std::span<const GaussianPeak> peaks) {
  for (const auto& p : peaks) {
    if (!(p.width > 0.0) || std::abs(p.weight) == 0.0) {
      throw DomainError("peak needs positive width and nonzero weight");
    }
    if (p.width < 3.0 * grid.dx()) {
      std::ostringstream os;
      os << "peak width " << p.width << " is below 3 dx = " << 3.0 * grid.dx();
      throw ResolutionError(os.str());
    }
    if (!grid.contains(p.center)) {
      std::ostringstream os;
      os << "peak center " << p.center << " outside [" << grid.x_min() << ", " << grid.x_max()
         << "]";
      throw DomainError(os.str());
    }
  }
  std::vector<cplx> amps(grid.size(), cplx{});
  for (const auto& p : peaks) {
    const double inv = 1.0 / (2.0 * p.width * p.width);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      const double u = grid.x(i) - p.center;
      amps[i] += p.weight * std::exp(-u * u * inv);
    }
  }
  return WaveFunction(grid, std::move(amps));
}

WaveFunction make_gaussian_superposition(const Grid1D& grid, std::span<const GaussianPeak> peaks) {
  return gaussian_sum(grid, peaks).normalized();
}

double norm_squared(const WaveFunction& wf) {
  return kernels::sum_abs2(wf.amplitudes()) * wf.grid().dx();
}

double moment(const WaveFunction& wf, int k, std::optional<Region> region) {
  if (k < 0 || k > 4) throw DomainError("moment order must be in [0, 4]");
  const double lo = region ? region->lo : wf.grid().x_min();
  const double hi = region ? region->hi : wf.grid().x_max();
  const auto sums = kernels::moment_sums(wf.grid(), wf.amplitudes(), k, lo, hi);
  if (!(sums.mass * wf.grid().dx() >= 1e-300)) {
    throw EmptyRegionError("region carries no probability mass");
  }
  return sums.weighted / sums.mass;
}

double tail_mass(const WaveFunction& wf, const Region& region) {
  return kernels::moment_sums(wf.grid(), wf.amplitudes(), 0, region.lo, region.hi).mass *
         wf.grid().dx();
}

std::vector<GaussianPeak> find_peaks(const WaveFunction& wf, double min_rel_height) {
  if (!(min_rel_height > 0.0 && min_rel_height < 1.0)) {
    throw DomainError("min_rel_height must lie in (0, 1)");
  }
  const auto amps = wf.amplitudes();
  const std::size_t n = amps.size();
  std::vector<double> mag(n);
  for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(amps[i]);
  const double floor = min_rel_height * *std::max_element(mag.begin(), mag.end());
  const double dx = wf.grid().dx();

  std::vector<GaussianPeak> peaks;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(mag[i] > floor && mag[i] > mag[i - 1] && mag[i] >= mag[i + 1])) continue;
    // Five samples centred on i, shifted inward at the grid edges.
    const std::size_t lo = std::clamp<std::size_t>(i, 2, n - 3) - 2;
    double sy = 0.0, svy = 0.0, sv2y = 0.0;
    bool usable = true;
    for (std::size_t j = lo; j < lo + 5; ++j) {
      if (!(mag[j] > 0.0)) {
        usable = false;
        break;
      }
      const double v = static_cast<double>(j) - static_cast<double>(lo + 2);
      const double y = std::log(mag[j]);
      sy += y;
      svy += v * y;
      sv2y += v * v * y;
    }
    if (!usable) continue;
    // Least squares y = c0 + c1 v + c2 v^2 on v in {-2..2}: sum v^2 = 10, sum v^4 = 34.
    const double c2 = (5.0 * sv2y - 10.0 * sy) / 70.0;
    const double c1 = svy / 10.0;
    const double c0 = (sy - 10.0 * c2) / 5.0;
    if (!(c2 < 0.0)) continue;
    const double v_peak = -c1 / (2.0 * c2);
    const double center = wf.grid().x(lo + 2) + v_peak * dx;
    const double width = dx / std::sqrt(-2.0 * c2);
    const double height = std::exp(c0 - c1 * c1 / (4.0 * c2));
    const cplx phase = amps[i] / mag[i];
    peaks.push_back(GaussianPeak{center, width, height * phase});
  }
  std::stable_sort(peaks.begin(), peaks.end(), [](const GaussianPeak& l, const GaussianPeak& r) {
    return std::abs(l.weight) > std::abs(r.weight);
  });
  return peaks;
}

namespace {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

// FFTW plan pair for one transform length; planning is serialized.
class FftPlan {
 public:
  explicit FftPlan(std::vector<cplx>& buf) {
    std::lock_guard lock(fftw_planner_mutex());
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    const int n = static_cast<int>(buf.size());
    fwd_ = fftw_plan_dft_1d(n, p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(n, p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~FftPlan() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  void forward() const { fftw_execute(fwd_); }
  void backward() const { fftw_execute(bwd_); }

 private:
  fftw_plan fwd_;
  fftw_plan bwd_;
};

}  // namespace

EvolveResult evolve_free(const WaveFunction& wf, double dt, double mass, double hbar) {
  if (!(dt >= 0.0)) throw DomainError("evolution time must be non-negative");
  if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("mass and hbar must be positive");
  const std::size_t n = wf.size();
  const double dx = wf.grid().dx();
  std::vector<cplx> buf(wf.amplitudes().begin(), wf.amplitudes().end());
  {
    FftPlan plan(buf);
    plan.forward();
    const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double m = j < (n + 1) / 2 ? static_cast<double>(j)
                                        : static_cast<double>(j) - static_cast<double>(n);
      const double k = m * dk;
      const double phase = -hbar * k * k * dt / (2.0 * mass);
      buf[j] *= std::polar(scale, phase);
    }
    plan.backward();
  }

  double peak = 0.0;
  for (const auto& z : buf) peak = std::max(peak, std::abs(z));
  const std::size_t edge = std::max<std::size_t>(2, n / 100);
  double boundary = 0.0;
  for (std::size_t i = 0; i < edge; ++i) {
    boundary = std::max({boundary, std::abs(buf[i]), std::abs(buf[n - 1 - i])});
  }
  EvolveResult out{WaveFunction(wf.grid(), std::move(buf)), peak > 0.0 ? boundary / peak : 0.0,
                   std::nullopt};
  if (out.boundary_ratio > kLeakageThreshold) {
    std::ostringstream os;
    os << "boundary amplitude ratio " << out.boundary_ratio
       << " exceeds leakage threshold; periodic wrap-around likely";
    out.warning = os.str();
  }
  return out;
}

}  // namespace grw
