// SPDX-License-Identifier: Apache-2.0
//
// OpenMP kernels against their serial references, at several thread counts.
#include <doctest.h>
#include <omp.h>

#include <array>
#include <cmath>

#include "grwtails/kernels.hpp"
#include "grwtails/wavefunction.hpp"

using namespace grw;

namespace {

WaveFunction sample_state(std::size_t n) {
  const Grid1D g(-12.0, 18.0, n);
  const std::array p{GaussianPeak{0.0, 0.7, {0.9, 0.1}}, GaussianPeak{6.0, 0.5, {0.0, 0.4}}};
  return make_gaussian_superposition(g, p);
}

struct ThreadScope {
  explicit ThreadScope(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadScope() { omp_set_num_threads(saved); }
  int saved;
};

}  // namespace

TEST_CASE("reductions match the serial reference and are thread-count independent") {
  const auto wf = sample_state(10007);
  const double ref = kernels::serial::sum_abs2(wf.amplitudes());
  double first = 0.0;
  for (int threads : {1, 2, 3, 8}) {
    ThreadScope scope(threads);
    const double s = kernels::sum_abs2(wf.amplitudes());
    CHECK(s == doctest::Approx(ref).epsilon(1e-13));
    if (threads == 1) first = s;
    CHECK(s == first);  // bitwise

    const auto m = kernels::moment_sums(wf.grid(), wf.amplitudes(), 3, -2.0, 9.0);
    const auto mr = kernels::serial::moment_sums(wf.grid(), wf.amplitudes(), 3, -2.0, 9.0);
    CHECK(m.weighted == doctest::Approx(mr.weighted).epsilon(1e-13));
    CHECK(m.mass == doctest::Approx(mr.mass).epsilon(1e-13));
  }
}

TEST_CASE("smeared density matches the full O(n^2) reference") {
  const auto wf = sample_state(1500);
  for (double a : {0.05, 0.8, 3.0}) {
    const auto par = kernels::smeared_density(wf.grid(), wf.amplitudes(), a);
    const auto ref = kernels::serial::smeared_density(wf.grid(), wf.amplitudes(), a);
    double peak = 0.0;
    for (double v : ref) peak = std::max(peak, v);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(std::abs(par[i] - ref[i]) <= 1e-13 * peak);
    }
  }
}

TEST_CASE("kernel application matches the reference") {
  const auto wf = sample_state(4000);
  for (const auto& k : {CollapseKernel::gaussian(1.0, 0.5), CollapseKernel::compact(1.0, 6.0, 4.0),
                        CollapseKernel::compact(0.5, 6.0, 4.0, true)}) {
    const auto par = kernels::apply_kernel(wf.grid(), wf.amplitudes(), k);
    const auto ref = kernels::serial::apply_kernel(wf.grid(), wf.amplitudes(), k);
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(par[i] == ref[i]);
  }
}

TEST_CASE("2D kick quadrature matches the reference") {
  const Grid1D rg(-5.0, 5.0, 301);
  const Grid1D cg(-4.0, 4.0, 257);
  std::vector<double> pr(rg.size()), pc(cg.size());
  for (std::size_t i = 0; i < rg.size(); ++i) pr[i] = std::exp(-rg.x(i) * rg.x(i) / 2.0);
  for (std::size_t i = 0; i < cg.size(); ++i) pc[i] = std::exp(-cg.x(i) * cg.x(i));
  for (const auto& k : {CollapseKernel::gaussian(3.0, 2.0), CollapseKernel::gaussian(0.1, 400.0),
                        CollapseKernel::compact(1.0, 5.0, 3.0)}) {
    for (int threads : {1, 4}) {
      ThreadScope scope(threads);
      const auto par = kernels::kick_sums(rg, pr, cg, pc, k);
      const auto ref = kernels::serial::kick_sums(rg, pr, cg, pc, k);
      CHECK(par.log_shift == doctest::Approx(ref.log_shift).epsilon(1e-14));
      CHECK(par.mass == doctest::Approx(ref.mass).epsilon(1e-12));
      CHECK(par.r_mass / par.mass == doctest::Approx(ref.r_mass / ref.mass).epsilon(1e-12));
    }
  }
  const auto far = kernels::kick_sums(rg, pr, cg, pc, CollapseKernel::compact(1.0, 100.0, 3.0));
  CHECK_FALSE(std::isfinite(far.log_shift));
}

TEST_CASE("event ensemble is identical to the serial loop for any thread count") {
  const auto ref = kernels::serial::event_ensemble(1e6, 1e-3, 0.3, 24, 99);
  for (int threads : {1, 2, 5}) {
    ThreadScope scope(threads);
    const auto par = kernels::event_ensemble(1e6, 1e-3, 0.3, 24, 99);
    REQUIRE(par.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(par[i].collapses == ref[i].collapses);
      CHECK(par[i].ejections == ref[i].ejections);
    }
  }
  CHECK(kernels::run_event_stream(1e6, 0.0, 1.0, 1, 0).collapses == 0);
}
