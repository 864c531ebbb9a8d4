// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace grw {

/// Collapse function c(x). The Gaussian kind is exp(-(x - center)^2 / 2 a^2);
/// the compact kind is the same Gaussian, exactly zero beyond cutoff_multiple * a,
/// optionally tapered to zero by a smooth bump over the last 5% of the radius.
struct CollapseKernel {
  enum class Kind { Gaussian, CompactSupport };

  Kind kind = Kind::Gaussian;
  double width = 1.0;  // a
  double center = 0.0;
  double cutoff_multiple = 10.0;
  bool taper = false;

  static CollapseKernel gaussian(double width, double center);
  /// Throws DomainError when cutoff_multiple < 3.
  static CollapseKernel compact(double width, double center, double cutoff_multiple = 10.0,
                                bool taper = false);

  double support_radius() const noexcept { return cutoff_multiple * width; }
  bool in_support(double x) const noexcept;
};

double kernel_value(const CollapseKernel& kernel, double x);

/// ln c(x); -infinity where the compact kernel vanishes.
double kernel_log_value(const CollapseKernel& kernel, double x);

/// d/dx ln c(x). Throws SupportError where c(x) == 0.
double kernel_log_gradient(const CollapseKernel& kernel, double x);

}  // namespace grw
