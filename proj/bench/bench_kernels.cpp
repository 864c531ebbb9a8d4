// SPDX-License-Identifier: Apache-2.0
//
// OpenMP kernels against their serial references.
#include <benchmark/benchmark.h>

#include <array>

#include "grwtails/kernels.hpp"
#include "grwtails/wavefunction.hpp"

using namespace grw;

namespace {

WaveFunction state(std::size_t n) {
  const Grid1D g(-20.0, 30.0, n);
  const std::array p{GaussianPeak{0.0, 1.0, 1.0}, GaussianPeak{8.0, 0.5, 0.5}};
  return make_gaussian_superposition(g, p);
}

template <auto Fn>
void BM_sum_abs2(benchmark::State& st) {
  const auto wf = state(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(wf.amplitudes()));
}

template <auto Fn>
void BM_smeared(benchmark::State& st) {
  const auto wf = state(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(Fn(wf.grid(), wf.amplitudes(), 0.5));
}

template <auto Fn>
void BM_kick(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const Grid1D rg(-1.0, 1.0, n), cg(-1.0, 1.0, 801);
  std::vector<double> pr(n), pc(801);
  for (std::size_t i = 0; i < n; ++i) pr[i] = std::exp(-rg.x(i) * rg.x(i) * 20);
  for (std::size_t i = 0; i < 801; ++i) pc[i] = std::exp(-cg.x(i) * cg.x(i) * 20);
  const auto k = CollapseKernel::gaussian(3.0, 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(Fn(rg, pr, cg, pc, k));
}

template <auto Fn>
void BM_events(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(Fn(1e9, 1e-3, 0.1, 8, 1));
}

}  // namespace

BENCHMARK(BM_sum_abs2<kernels::sum_abs2>)->Arg(1 << 20);
BENCHMARK(BM_sum_abs2<kernels::serial::sum_abs2>)->Arg(1 << 20);
BENCHMARK(BM_smeared<kernels::smeared_density>)->Arg(4096);
BENCHMARK(BM_smeared<kernels::serial::smeared_density>)->Arg(4096);
BENCHMARK(BM_kick<kernels::kick_sums>)->Arg(1025);
BENCHMARK(BM_kick<kernels::serial::kick_sums>)->Arg(1025);
BENCHMARK(BM_events<kernels::event_ensemble>);
BENCHMARK(BM_events<kernels::serial::event_ensemble>);

BENCHMARK_MAIN();
