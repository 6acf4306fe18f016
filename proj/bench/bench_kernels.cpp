// Serial reference against the OpenMP path for each data-parallel kernel.
// Arg 0 is Exec::Serial, arg 1 is Exec::Parallel.
#include "biharm/classification.hpp"
#include "biharm/kernels.hpp"
#include "biharm/lie_algebra.hpp"
#include "biharm/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using biharm::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void BM_KillingForm(benchmark::State& state) {
  const biharm::MatrixLieAlgebra alg(biharm::MatrixFamily::SU, 6, Exec::Serial);
  for (auto _ : state) benchmark::DoNotOptimize(biharm::killing_form(alg, exec_of(state)));
}
BENCHMARK(BM_KillingForm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BracketTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(biharm::MatrixLieAlgebra(biharm::MatrixFamily::SO, 9, exec_of(state)));
}
BENCHMARK(BM_BracketTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Curve(benchmark::State& state) {
  const biharm::SymmetricTriad1D t(biharm::TriadKind::IIIBC1, {8, 7, 8, 1});
  for (auto _ : state) benchmark::DoNotOptimize(biharm::sample_curve(t, 200000, exec_of(state)));
}
BENCHMARK(BM_Curve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Catalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(biharm::classify_catalog(12, exec_of(state)));
}
BENCHMARK(BM_Catalog)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const biharm::TriadBuild build = biharm::build_so_triad(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(biharm::verify_closed_forms(build, 20, 1e-9, exec_of(state)));
}
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
