// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "grwtails/collapse.hpp"
#include "grwtails/error.hpp"
#include "grwtails/tail_analytics.hpp"
#include "oracles.hpp"

using namespace grw;
using oracle::ks;
using oracle::SmearedOracle;

TEST_CASE("kernel values") {
  const auto g = CollapseKernel::gaussian(1.0, 2.0);
  CHECK(kernel_value(g, 2.0) == 1.0);
  CHECK(kernel_value(g, 3.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(kernel_value(g, 3.0) == doctest::Approx(0.60653).epsilon(1e-5));
  const auto c = CollapseKernel::compact(1.0, 0.0, 10.0);
  CHECK(kernel_value(c, 10.5) == 0.0);
  CHECK(kernel_value(c, -10.5) == 0.0);
  CHECK(kernel_value(c, 9.9) == kernel_value(CollapseKernel::gaussian(1.0, 0.0), 9.9));
  CHECK_THROWS_AS(CollapseKernel::compact(1.0, 0.0, 2.5), DomainError);
  CHECK_THROWS_AS(CollapseKernel::gaussian(0.0, 0.0), DomainError);
}

TEST_CASE("tapered compact kernel") {
  const auto t = CollapseKernel::compact(1.0, 0.0, 10.0, true);
  const auto g = CollapseKernel::gaussian(1.0, 0.0);
  CHECK(kernel_value(t, 9.0) == kernel_value(g, 9.0));
  CHECK(kernel_value(t, 9.8) < kernel_value(g, 9.8));
  CHECK(kernel_value(t, 9.8) > 0.0);
  CHECK(kernel_value(t, 10.0) == 0.0);
  CHECK(kernel_value(t, 10.01) == 0.0);
}

TEST_CASE("kernel log-gradient") {
  const auto g = CollapseKernel::gaussian(1e-7, 0.0);
  CHECK(kernel_log_gradient(g, 0.0) == 0.0);
  CHECK(kernel_log_gradient(g, 1e-7) == doctest::Approx(-1e7).epsilon(1e-14));
  // Finite-difference oracle.
  const auto fd = [](const CollapseKernel& k, double x, double h) {
    return (std::log(kernel_value(k, x + h)) - std::log(kernel_value(k, x - h))) / (2.0 * h);
  };
  const auto g1 = CollapseKernel::gaussian(1.0, 0.3);
  for (double x : {-2.0, 0.1, 1.7}) {
    CHECK(kernel_log_gradient(g1, x) == doctest::Approx(fd(g1, x, 1e-5)).epsilon(1e-6));
  }
  const auto t = CollapseKernel::compact(1.0, 0.0, 4.0, true);
  for (double x : {3.85, -3.9, 3.95}) {
    CHECK(kernel_log_gradient(t, x) == doctest::Approx(fd(t, x, 1e-7)).epsilon(1e-5));
  }
  CHECK_THROWS_AS(kernel_log_gradient(CollapseKernel::compact(1.0, 0.0, 10.0), 11.0), SupportError);
}

namespace {

WaveFunction two_peaks(const Grid1D& g, double left, double right, double w, double p_right) {
  const std::array p{GaussianPeak{left, w, std::sqrt(1.0 - p_right)},
                     GaussianPeak{right, w, std::sqrt(p_right)}};
  return make_gaussian_superposition(g, p);
}

}  // namespace

TEST_CASE("collapse centres: symmetric single peak") {
  const Grid1D g(-15.0, 15.0, 2048);
  const std::array p{GaussianPeak{0.0, 0.5, 1.0}};
  const auto wf = make_gaussian_superposition(g, p);
  const CenterSampler s(wf, 1.0);
  Rng rng(1);
  const int n = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = s.sample(rng);
    sum += x;
    sum2 += x * x;
  }
  const double mean = sum / n;
  const double sd = std::sqrt(sum2 / n - mean * mean);
  CHECK(std::abs(mean) < 3.0 * sd / std::sqrt(double(n)));
}

TEST_CASE("collapse centres: symmetric two-peak split") {
  const Grid1D g(-10.0, 30.0, 2048);
  const auto wf = two_peaks(g, 0.0, 20.0, 0.5, 0.5);
  const CenterSampler s(wf, 1.0);
  Rng rng(2);
  const int n = 100000;
  int left = 0;
  for (int i = 0; i < n; ++i) left += s.sample(rng) < 10.0;
  CHECK(std::abs(left / double(n) - 0.5) < 3.0 * std::sqrt(0.25 / n));
}

TEST_CASE("collapse centres: narrow peak spread matches the smeared-density quadrature") {
  const double w = 0.02, a = 1.0, xp = 1.5;
  const Grid1D g(-8.0, 11.0, 4096);
  const std::array p{GaussianPeak{xp, w, 1.0}};
  const auto wf = make_gaussian_superposition(g, p);
  SmearedOracle o{{p.begin(), p.end()}, a, -8.0, 11.0, {}, {}, 8000};
  // Oracle standard deviation by quadrature of the smeared density.
  const double m0 = oracle::simpson([&](double x) { return o.density(x); }, -8.0, 11.0, 2000);
  const double m1 = oracle::simpson([&](double x) { return x * o.density(x); }, -8.0, 11.0, 2000);
  const double m2 = oracle::simpson([&](double x) { return x * x * o.density(x); }, -8.0, 11.0, 2000);
  const double sd_oracle = std::sqrt(m2 / m0 - (m1 / m0) * (m1 / m0));
  const CenterSampler s(wf, a);
  Rng rng(3);
  const int n = 100000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = s.sample(rng);
    sum += x;
    sum2 += x * x;
  }
  const double sd = std::sqrt(sum2 / n - (sum / n) * (sum / n));
  CHECK(std::abs(sd - sd_oracle) < 0.02 * sd_oracle);
}

TEST_CASE("property: sampler CDF converges to the quadrature CDF (KS) for three states") {
  const double a = 1.0;
  const Grid1D g(-10.0, 25.0, 3000);
  struct Case {
    std::vector<GaussianPeak> peaks;
  };
  const std::vector<Case> cases{
      {{GaussianPeak{0.0, 0.4, 1.0}}},
      {{GaussianPeak{0.0, 0.4, std::sqrt(0.5)}, GaussianPeak{12.0, 0.4, std::sqrt(0.5)}}},
      {{GaussianPeak{0.0, 0.6, std::sqrt(0.9)}, GaussianPeak{1.2, 0.6, std::sqrt(0.1)}}},
  };
  std::uint64_t seed = 10;
  for (const auto& c : cases) {
    const auto wf = make_gaussian_superposition(g, c.peaks);
    SmearedOracle o{c.peaks, a, -10.0, 25.0, {}, {}};
    o.build(7000);
    const CenterSampler s(wf, a);
    Rng rng(seed++);
    std::vector<double> xs(100000);
    for (auto& x : xs) x = s.sample(rng);
    CHECK(ks(xs, o) < 0.02);
    CHECK(ks(xs, [&](double x) { return s.cdf(x); }) < 0.02);
  }
}

TEST_CASE("apply_collapse: flat-kernel limit") {
  const Grid1D g(-10.0, 10.0, 1024);
  const std::array p{GaussianPeak{-1.0, 1.0, 1.0}, GaussianPeak{2.0, 0.7, {0.0, 1.0}}};
  const auto wf = make_gaussian_superposition(g, p);
  const auto out = apply_collapse(wf, CollapseKernel::gaussian(2e7, 3.0));
  CHECK(out.pre_weight == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(out.pre_weight <= 1.0);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(out.post_state[i] - wf[i]));
  CHECK(err < 1e-6);
}

TEST_CASE("apply_collapse: tail displacement and renormalization") {
  const double w = 1.0, a = 10.0, x0 = 5.0;
  const Grid1D g(-20.0, 30.0, 8192);
  const std::array p{GaussianPeak{0.0, w, 1.0}, GaussianPeak{x0, w, 1.0}};
  const auto out = apply_collapse(make_gaussian_superposition(g, p), CollapseKernel::gaussian(a, 0.0));
  CHECK(std::abs(norm_squared(out.post_state) - 1.0) < 1e-12);
  CHECK(out.pre_weight > 0.0);
  CHECK(out.pre_weight < 1.0);
  const auto peaks = find_peaks(out.post_state, 1e-6);
  REQUIRE(peaks.size() == 2);
  CHECK(peaks[1].center == doctest::Approx(x0 * a * a / (a * a + w * w)).epsilon(1e-4));
}

TEST_CASE("apply_collapse: compact kernel erases a distant tail") {
  const double a = 1.0, w = 0.1;
  const Grid1D g(-1.0, 21.0, 4400);
  const std::array p{GaussianPeak{0.0, w, 1.0}, GaussianPeak{20.0, w, 1.0}};
  const auto wf = make_gaussian_superposition(g, p);
  const auto compact = apply_collapse(wf, CollapseKernel::compact(a, 0.0, 10.0));
  CHECK(tail_mass(compact.post_state, Region::make(10.0 + 1e-9, 21.0)) == 0.0);
  const auto gauss = apply_collapse(wf, CollapseKernel::gaussian(a, 0.0));
  CHECK(tail_mass(gauss.post_state, Region::make(10.0 + 1e-9, 21.0)) > 0.0);
  CHECK_THROWS_AS(apply_collapse(wf, CollapseKernel::compact(a, 10.0, 3.0)), AnnihilationError);
}

TEST_CASE("property: suppression constant and displacement direction") {
  // Numeric suppression from the grid product must match exp(-k x0^2), k = 1/(2 a'^2),
  // for w <= a/10 and x0 <= 3a, and the tail must always move toward the centre.
  const double a = 1.0;
  for (double w : {0.05, 0.1}) {
    for (double x0 : {-3.0, -1.3, 0.7, 2.0, 3.0}) {
      const double lo = std::min(0.0, x0) - 8 * w, hi = std::max(0.0, x0) + 8 * w;
      const Grid1D g(lo, hi, static_cast<std::size_t>((hi - lo) / (w / 40)) + 1);
      const std::array p{GaussianPeak{0.0, w, 1.0}, GaussianPeak{x0, w, 1.0}};
      const auto out = apply_collapse(make_gaussian_superposition(g, p), CollapseKernel::gaussian(a, 0.0));
      const auto peaks = find_peaks(out.post_state, 1e-12);
      REQUIRE(peaks.size() == 2);
      const auto& dom = std::abs(peaks[0].center) < std::abs(peaks[1].center) ? peaks[0] : peaks[1];
      const auto& tail = &dom == &peaks[0] ? peaks[1] : peaks[0];
      const double ratio = std::abs(tail.weight) / std::abs(dom.weight);
      const double expected = std::exp(-x0 * x0 / (2.0 * (a * a + w * w)));
      CHECK(std::abs(ratio - expected) < 1e-6 * expected);
      CHECK(std::abs(tail.center) < std::abs(x0));
      CHECK(tail.center * x0 > 0.0);
    }
  }
}

TEST_CASE("grw_hit: symmetric state picks each side half the time") {
  const Grid1D g(-10.0, 30.0, 800);
  const auto wf = two_peaks(g, 0.0, 20.0, 0.5, 0.5);
  Rng rng(5);
  const int runs = 2500;
  int left = 0;
  for (int i = 0; i < runs; ++i) {
    const auto out = grw_hit(wf, 1.0, rng);
    CHECK(out.pre_weight <= 1.0);
    left += tail_mass(out.post_state, Region::make(-10.0, 10.0)) > 0.5;
  }
  CHECK(std::abs(left / double(runs) - 0.5) < 3.0 * std::sqrt(0.25 / runs));
}

TEST_CASE("grw_hit: 90/10 state selects the heavy peak 90% of the time") {
  const Grid1D g(-10.0, 30.0, 800);
  const auto wf = two_peaks(g, 0.0, 20.0, 0.5, 0.1);
  // Exact selection probability from the smeared density: the peaks are 20a apart, so
  // the mass of the smeared density on the heavy side equals its |psi|^2 weight.
  SmearedOracle o{{GaussianPeak{0.0, 0.5, std::sqrt(0.9)}, GaussianPeak{20.0, 0.5, std::sqrt(0.1)}},
                  1.0, -10.0, 30.0, {}, {}};
  o.build(8000);
  const double p_heavy = o(10.0);
  CHECK(p_heavy == doctest::Approx(0.9).epsilon(1e-9));
  Rng rng(6);
  const int runs = 2500;
  int heavy = 0;
  for (int i = 0; i < runs; ++i) {
    heavy += tail_mass(grw_hit(wf, 1.0, rng).post_state, Region::make(-10.0, 10.0)) > 0.5;
  }
  CHECK(std::abs(heavy / double(runs) - p_heavy) < 3.0 * std::sqrt(p_heavy * (1 - p_heavy) / runs));
}
