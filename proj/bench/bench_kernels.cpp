// serial reference vs OpenMP versions of the heavy kernels
#include <benchmark/benchmark.h>

#include "poincare/eisenstein/eisenstein.hpp"
#include "poincare/fourier/fourier.hpp"
#include "poincare/icoeff/icoeff.hpp"

using namespace poincare;

static Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

static void BM_lattice(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(eisenstein::eisenstein_lattice(1.5, {0.3, 1.1}, 400, exec_of(st)));
}
BENCHMARK(BM_lattice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_assemble_mode(benchmark::State& st) {
  // y varies so the per-(y, W) mode cache is not hit
  double y = 1.0;
  for (auto _ : st) {
    y += 1e-9;
    benchmark::DoNotOptimize(fourier::assemble_mode(3, y, 10, exec_of(st)));
  }
}
BENCHMARK(BM_assemble_mode)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_quadrature(benchmark::State& st) {
  icoeff::QuadOptions o;
  o.exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(icoeff::i_quadrature(1, 1, 0.5, 1e-4, o));
}
BENCHMARK(BM_quadrature)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
