// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops. Every kernel exists twice: an OpenMP version in
// grw::kernels and a plain serial reference in grw::kernels::serial that the
// tests compare against.
//
// Floating-point reductions in the OpenMP versions are accumulated over fixed
// blocks of kBlock elements and the block partials are summed in order, so the
// result is independent of the thread count.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "grwtails/kernel.hpp"
#include "grwtails/wavefunction.hpp"

namespace grw::kernels {

inline constexpr std::size_t kBlock = 2048;

/// Sums of a 2D quadrature: total weight and weight * r.
struct KickSums {
  double mass = 0.0;
  double r_mass = 0.0;
  double log_shift = 0.0;  // weights were scaled by exp(-log_shift)
};

/// Per-repetition Monte Carlo tallies.
struct EventTally {
  std::uint64_t collapses = 0;
  std::uint64_t ejections = 0;
};

double sum_abs2(std::span<const cplx> amps);

/// sum_i x_i^k p_i and sum_i p_i over samples with lo <= x_i <= hi.
struct MomentSums {
  double weighted = 0.0;
  double mass = 0.0;
};
MomentSums moment_sums(const Grid1D& grid, std::span<const cplx> amps, int k, double lo, double hi);

/// p_j = sum_i exp(-(x_i - x_j)^2 / a^2) |psi_i|^2 dx, evaluated at every grid
/// point x_j. The parallel version truncates the kernel where it drops below 1e-40.
std::vector<double> smeared_density(const Grid1D& grid, std::span<const cplx> amps, double a);

/// psi_i * c(x_i).
std::vector<cplx> apply_kernel(const Grid1D& grid, std::span<const cplx> amps,
                               const CollapseKernel& kernel);

/// 2D quadrature of c^2(R + r) p_R(R) p_r(r) over the product grid, scaled by
/// exp(-log_shift) where log_shift is the largest ln c^2 met on the support.
KickSums kick_sums(const Grid1D& r_grid, std::span<const double> p_r, const Grid1D& com_grid,
                   std::span<const double> p_com, const CollapseKernel& kernel);

/// Poisson event streams of the given rate over `duration`, one per repetition
/// drawn from substream(seed, rep); each event ejects with probability p_eject.
std::vector<EventTally> event_ensemble(double rate, double duration, double p_eject,
                                       std::size_t repetitions, std::uint64_t seed);

namespace serial {

double sum_abs2(std::span<const cplx> amps);
MomentSums moment_sums(const Grid1D& grid, std::span<const cplx> amps, int k, double lo, double hi);
std::vector<double> smeared_density(const Grid1D& grid, std::span<const cplx> amps, double a);
std::vector<cplx> apply_kernel(const Grid1D& grid, std::span<const cplx> amps,
                               const CollapseKernel& kernel);
KickSums kick_sums(const Grid1D& r_grid, std::span<const double> p_r, const Grid1D& com_grid,
                   std::span<const double> p_com, const CollapseKernel& kernel);
std::vector<EventTally> event_ensemble(double rate, double duration, double p_eject,
                                       std::size_t repetitions, std::uint64_t seed);

}  // namespace serial

/// One repetition of event_ensemble; shared by both versions.
EventTally run_event_stream(double rate, double duration, double p_eject, std::uint64_t seed,
                            std::uint64_t rep);

}  // namespace grw::kernels
