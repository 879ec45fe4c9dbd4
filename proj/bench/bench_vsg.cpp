// Serial reference vs OpenMP kernels on the same inputs.

#include <benchmark/benchmark.h>

#include "vsg/batch.hpp"
#include "vsg/hom_count.hpp"
#include "vsg/kernels.hpp"

using namespace vsg;

namespace {

Exec exec_of(benchmark::State const& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_CountHoms(benchmark::State& state) {
  auto const p = build_presentation(GroupFamily::VSG, 2);
  auto const s4 = FiniteGroup::symmetric(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? count_homs_parallel(p, s4) : count_homs(p, s4));
  label(state);
}

void BM_CountHomsKernel(benchmark::State& state) {
  auto const p = run_kernel_pipeline(GroupFamily::VSG, 2, Triple{1, 1, 0}).presentation;
  auto const s4 = FiniteGroup::symmetric(4);
  for (auto _ : state)
    benchmark::DoNotOptimize(state.range(0) ? count_homs_parallel(p, s4) : count_homs(p, s4));
  label(state);
}

void BM_Invariance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(invariance_batch(GroupFamily::VSG, 6, 2000, 1, exec_of(state)));
  label(state);
}

void BM_Decompose(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(decompose_batch(6, 2000, 1, exec_of(state)));
  label(state);
}

void BM_TrivialCenter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(trivial_center_batch("Z^2 * Z_2 * Z_2", 1000, 1, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_CountHoms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountHomsKernel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Invariance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrivialCenter)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
