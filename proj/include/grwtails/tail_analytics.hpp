// SPDX-License-Identifier: Apache-2.0
//
// Closed-form consequences of one Gaussian hit on a two-peak state, the kick a
// hit gives a bound particle, and the excitation threshold, plus grid-based
// measurements of the same quantities.
#pragma once

#include "grwtails/kernel.hpp"
#include "grwtails/wavefunction.hpp"

namespace grw {

/// The tail/dominant amplitude ratio after a hit is exp(-k x0^2) with
/// k = kSuppressionExponentFactor / a'^2, a'^2 = a^2 + w^2 (completing the square).
inline constexpr double kSuppressionExponentFactor = 0.5;
/// Factor in the commonly quoted form exp(-x0^2 / a'^2); that form is the ratio
/// of |psi|^2 peak heights, not of amplitudes.
inline constexpr double kQuotedSuppressionExponentFactor = 1.0;

/// <r> = kKickKappa * (c'/c) * <r^2> in the small-width limit of the 1D
/// product model (COM and relative coordinate independent, zero mean).
inline constexpr double kKickKappa = 2.0;

struct TwoPeakPrediction {
  double w_prime = 0.0;
  double x0_prime = 0.0;
  double a_prime = 0.0;
  double suppression = 1.0;        // tail / dominant amplitude
  double exponent_constant = 0.0;  // k in exp(-k x0^2), units 1/length^2
};

/// Exact post-hit parameters for peaks of width w at 0 and x0, kernel of width a at 0.
TwoPeakPrediction predict_two_peak_collapse(double w, double a, double x0);

/// Narrow-peak approximation (w << a). Throws ValidityError unless w < a/3.
TwoPeakPrediction predict_two_peak_approx(double w, double a, double x0);

struct TailMeasurement {
  double x0_measured = 0.0;
  double suppression_measured = 1.0;
  double tail_width = 0.0;
  double dominant_width = 0.0;
  double dominant_center = 0.0;
};

/// Builds the equal-weight two-peak state on `grid`, hits it with a Gaussian
/// kernel at 0 and fits the peaks. Requires dx <= w/10 and the grid to cover
/// [min(0,x0) - 5w, max(0,x0) + 5w]. Throws UnmeasurableTailError when the tail
/// is not resolved or falls below 1e-12 of the dominant peak.
TailMeasurement measure_tail_displacement(double w, double a, double x0, const Grid1D& grid);

struct CompoundSpec {
  double com_width = 0.0;      // amplitude width of the centre-of-mass packet
  double internal_rms = 0.0;   // sqrt(<r^2>)
  double particle_width = 0.0; // characteristic width of the compound

  /// Throws DomainError unless all fields are positive.
  static CompoundSpec make(double com_width, double internal_rms, double particle_width);
};

struct KickPrediction {
  double mean_relative_displacement = 0.0;
  double log_gradient = 0.0;
};

/// <r> after a hit on a compound x = R + r in 1D: COM packet exp(-R^2 / 2 com_width^2),
/// relative state relative_wf, compound at the origin. Direct 2D quadrature of
/// c^2(R + r) |Psi|^2 on the product grid. Throws AnnihilationError when no
/// post-collapse mass survives.
double kick_expectation_numeric(const WaveFunction& relative_wf, double com_width,
                                const CollapseKernel& kernel);

/// Linearized kick for a compound whose COM sits at kernel.center - collapse_distance
/// (positive distance: collapse centre on the +x side). Throws SupportError
/// outside a compact kernel's support.
KickPrediction kick_expectation_linear(const CompoundSpec& spec, const CollapseKernel& kernel,
                                       double collapse_distance);

/// d_c = a^2 / w, from |c'(d)/c(d)| > 1/w with the Gaussian kernel.
double excitation_threshold(double w, double a);

}  // namespace grw
