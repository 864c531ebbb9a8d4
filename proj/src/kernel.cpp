// SPDX-License-Identifier: Apache-2.0
#include "grwtails/kernel.hpp"

#include <cmath>
#include <limits>

#include "grwtails/error.hpp"

namespace grw {
namespace {

constexpr double kTaperFraction = 0.05;

// Smooth step built from f(u) = exp(-1/u): 1 for t <= 0, 0 for t >= 1.
double bump_f(double u) { return u > 0.0 ? std::exp(-1.0 / u) : 0.0; }
double bump_df(double u) { return u > 0.0 ? std::exp(-1.0 / u) / (u * u) : 0.0; }

double taper_value(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  const double p = bump_f(1.0 - t);
  return p / (p + bump_f(t));
}

double taper_derivative(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double p = bump_f(1.0 - t);
  const double q = bump_f(t);
  const double s = p + q;
  return -(bump_df(1.0 - t) * q + p * bump_df(t)) / (s * s);
}

double taper_t(const CollapseKernel& k, double x) {
  const double radius = k.support_radius();
  const double start = (1.0 - kTaperFraction) * radius;
  return (std::abs(x - k.center) - start) / (kTaperFraction * radius);
}

}  // namespace

CollapseKernel CollapseKernel::gaussian(double width, double center) {
  if (!(width > 0.0)) throw DomainError("collapse width must be positive");
  return CollapseKernel{Kind::Gaussian, width, center, 10.0, false};
}

CollapseKernel CollapseKernel::compact(double width, double center, double cutoff_multiple,
                                       bool taper) {
  if (!(width > 0.0)) throw DomainError("collapse width must be positive");
  if (!(cutoff_multiple >= 3.0)) throw DomainError("cutoff_multiple must be >= 3");
  return CollapseKernel{Kind::CompactSupport, width, center, cutoff_multiple, taper};
}

bool CollapseKernel::in_support(double x) const noexcept {
  if (kind == Kind::Gaussian) return true;
  const double r = std::abs(x - center);
  if (r > support_radius()) return false;
  // The taper reaches exactly zero at the radius.
  return !taper || r < support_radius();
}

double kernel_log_value(const CollapseKernel& k, double x) {
  if (!k.in_support(x)) return -std::numeric_limits<double>::infinity();
  const double u = x - k.center;
  double lv = -u * u / (2.0 * k.width * k.width);
  if (k.kind == CollapseKernel::Kind::CompactSupport && k.taper) {
    const double s = taper_value(taper_t(k, x));
    if (s <= 0.0) return -std::numeric_limits<double>::infinity();
    lv += std::log(s);
  }
  return lv;
}

double kernel_value(const CollapseKernel& k, double x) {
  if (!k.in_support(x)) return 0.0;
  return std::exp(kernel_log_value(k, x));
}

double kernel_log_gradient(const CollapseKernel& k, double x) {
  if (kernel_value(k, x) <= 0.0 && !(k.kind == CollapseKernel::Kind::Gaussian)) {
    throw SupportError("log-gradient requested outside the kernel support");
  }
  const double u = x - k.center;
  double g = -u / (k.width * k.width);
  if (k.kind == CollapseKernel::Kind::CompactSupport && k.taper) {
    const double t = taper_t(k, x);
    if (t > 0.0) {
      const double dtdx = (u >= 0.0 ? 1.0 : -1.0) / (kTaperFraction * k.support_radius());
      g += taper_derivative(t) / taper_value(t) * dtdx;
    }
  }
  return g;
}

}  // namespace grw
