// SPDX-License-Identifier: Apache-2.0
#include "grwtails/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "grwtails/rng.hpp"

namespace grw::kernels {
namespace {

std::size_t n_blocks(std::size_t n) { return (n + kBlock - 1) / kBlock; }

// Sum of f(i) over [0, n), blocked so the result does not depend on threads.
template <class F>
double blocked_sum(std::size_t n, F&& f) {
  const std::size_t nb = n_blocks(n);
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = std::min(n, lo + kBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// ln c^2 at x; -inf outside the support.
double log_c2(const CollapseKernel& kernel, double x) { return 2.0 * kernel_log_value(kernel, x); }

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

double sum_abs2(std::span<const cplx> amps) {
  return blocked_sum(amps.size(), [&](std::size_t i) { return std::norm(amps[i]); });
}

MomentSums moment_sums(const Grid1D& grid, std::span<const cplx> amps, int k, double lo,
                       double hi) {
  MomentSums out;
  out.weighted = blocked_sum(amps.size(), [&](std::size_t i) {
    const double x = grid.x(i);
    return (x >= lo && x <= hi) ? ipow(x, k) * std::norm(amps[i]) : 0.0;
  });
  out.mass = blocked_sum(amps.size(), [&](std::size_t i) {
    const double x = grid.x(i);
    return (x >= lo && x <= hi) ? std::norm(amps[i]) : 0.0;
  });
  return out;
}

std::vector<double> smeared_density(const Grid1D& grid, std::span<const cplx> amps, double a) {
  const std::size_t n = amps.size();
  const double dx = grid.dx();
  // exp(-u^2/a^2) < 1e-40 beyond u = a * sqrt(40 ln 10).
  const double reach = a * std::sqrt(40.0 * std::log(10.0));
  const auto half = static_cast<std::ptrdiff_t>(std::min<double>(std::ceil(reach / dx), n));
  std::vector<double> prob(n);
  for (std::size_t i = 0; i < n; ++i) prob[i] = std::norm(amps[i]);
  std::vector<double> out(n);
  const double inv_a2 = 1.0 / (a * a);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(n); ++j) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, j - half);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(n) - 1, j + half);
    double s = 0.0;
    for (std::ptrdiff_t i = lo; i <= hi; ++i) {
      const double u = static_cast<double>(i - j) * dx;
      s += std::exp(-u * u * inv_a2) * prob[static_cast<std::size_t>(i)];
    }
    out[static_cast<std::size_t>(j)] = s * dx;
  }
  return out;
}

std::vector<cplx> apply_kernel(const Grid1D& grid, std::span<const cplx> amps,
                               const CollapseKernel& kernel) {
  std::vector<cplx> out(amps.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(amps.size()); ++i) {
    const auto u = static_cast<std::size_t>(i);
    out[u] = amps[u] * kernel_value(kernel, grid.x(u));
  }
  return out;
}

KickSums kick_sums(const Grid1D& r_grid, std::span<const double> p_r, const Grid1D& com_grid,
                   std::span<const double> p_com, const CollapseKernel& kernel) {
  const std::size_t nr = p_r.size();
  const std::size_t nc = p_com.size();

  std::vector<double> row_max(nc, kNegInf);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c) {
    const auto uc = static_cast<std::size_t>(c);
    if (p_com[uc] <= 0.0) continue;
    double m = kNegInf;
    for (std::size_t j = 0; j < nr; ++j) {
      if (p_r[j] > 0.0) m = std::max(m, log_c2(kernel, com_grid.x(uc) + r_grid.x(j)));
    }
    row_max[uc] = m;
  }
  KickSums out;
  out.log_shift = *std::max_element(row_max.begin(), row_max.end());
  if (!std::isfinite(out.log_shift)) return out;

  std::vector<double> row_mass(nc, 0.0);
  std::vector<double> row_r(nc, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c) {
    const auto uc = static_cast<std::size_t>(c);
    if (p_com[uc] <= 0.0) continue;
    double m = 0.0;
    double mr = 0.0;
    for (std::size_t j = 0; j < nr; ++j) {
      const double r = r_grid.x(j);
      const double w = std::exp(log_c2(kernel, com_grid.x(uc) + r) - out.log_shift) * p_r[j];
      m += w;
      mr += w * r;
    }
    row_mass[uc] = m * p_com[uc];
    row_r[uc] = mr * p_com[uc];
  }
  for (std::size_t c = 0; c < nc; ++c) {
    out.mass += row_mass[c];
    out.r_mass += row_r[c];
  }
  return out;
}

EventTally run_event_stream(double rate, double duration, double p_eject, std::uint64_t seed,
                            std::uint64_t rep) {
  Rng rng = substream(seed, rep);
  std::exponential_distribution<double> wait(rate);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  EventTally tally;
  if (!(rate > 0.0) || !(duration > 0.0)) return tally;
  double t = wait(rng);
  while (t < duration) {
    ++tally.collapses;
    if (unit(rng) < p_eject) ++tally.ejections;
    t += wait(rng);
  }
  return tally;
}

std::vector<EventTally> event_ensemble(double rate, double duration, double p_eject,
                                       std::size_t repetitions, std::uint64_t seed) {
  std::vector<EventTally> out(repetitions);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(repetitions); ++r) {
    out[static_cast<std::size_t>(r)] =
        run_event_stream(rate, duration, p_eject, seed, static_cast<std::uint64_t>(r));
  }
  return out;
}

namespace serial {

double sum_abs2(std::span<const cplx> amps) {
  double s = 0.0;
  for (const auto& z : amps) s += std::norm(z);
  return s;
}

MomentSums moment_sums(const Grid1D& grid, std::span<const cplx> amps, int k, double lo,
                       double hi) {
  MomentSums out;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double x = grid.x(i);
    if (x < lo || x > hi) continue;
    const double p = std::norm(amps[i]);
    out.weighted += ipow(x, k) * p;
    out.mass += p;
  }
  return out;
}

std::vector<double> smeared_density(const Grid1D& grid, std::span<const cplx> amps, double a) {
  const std::size_t n = amps.size();
  std::vector<double> out(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = grid.x(i) - grid.x(j);
      s += std::exp(-u * u / (a * a)) * std::norm(amps[i]);
    }
    out[j] = s * grid.dx();
  }
  return out;
}

std::vector<cplx> apply_kernel(const Grid1D& grid, std::span<const cplx> amps,
                               const CollapseKernel& kernel) {
  std::vector<cplx> out(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) out[i] = amps[i] * kernel_value(kernel, grid.x(i));
  return out;
}

KickSums kick_sums(const Grid1D& r_grid, std::span<const double> p_r, const Grid1D& com_grid,
                   std::span<const double> p_com, const CollapseKernel& kernel) {
  KickSums out;
  out.log_shift = kNegInf;
  for (std::size_t c = 0; c < p_com.size(); ++c) {
    for (std::size_t j = 0; j < p_r.size(); ++j) {
      if (p_com[c] > 0.0 && p_r[j] > 0.0) {
        out.log_shift = std::max(out.log_shift, log_c2(kernel, com_grid.x(c) + r_grid.x(j)));
      }
    }
  }
  if (!std::isfinite(out.log_shift)) return out;
  for (std::size_t c = 0; c < p_com.size(); ++c) {
    for (std::size_t j = 0; j < p_r.size(); ++j) {
      const double r = r_grid.x(j);
      const double w =
          std::exp(log_c2(kernel, com_grid.x(c) + r) - out.log_shift) * p_r[j] * p_com[c];
      out.mass += w;
      out.r_mass += w * r;
    }
  }
  return out;
}

std::vector<EventTally> event_ensemble(double rate, double duration, double p_eject,
                                       std::size_t repetitions, std::uint64_t seed) {
  std::vector<EventTally> out;
  out.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    out.push_back(run_event_stream(rate, duration, p_eject, seed, r));
  }
  return out;
}

}  // namespace serial
}  // namespace grw::kernels
