// Serial reference loops against the OpenMP kernels the library uses.

#include <benchmark/benchmark.h>

#include <vector>

#include "k3neck/diophantine.hpp"
#include "k3neck/kernels.hpp"

using namespace k3neck;

namespace {

kernels::cplx g4_term(kernels::cplx l) { return 1.0 / (l * l * l * l); }

void BM_LatticeSumSerial(benchmark::State& state) {
  const kernels::LatticeDisc disc{{0.1, 1.1}, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::lattice_sum<kernels::cplx>(disc, g4_term));
}

void BM_LatticeSumParallel(benchmark::State& state) {
  const kernels::LatticeDisc disc{{0.1, 1.1}, static_cast<double>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::lattice_sum<kernels::cplx>(disc, g4_term));
}

void BM_DistanceScanSerial(benchmark::State& state) {
  const RealNumberRep p = RealNumberRep::parse("sqrt(2)"), q = RealNumberRep::parse("sqrt(3)");
  for (auto _ : state) benchmark::DoNotOptimize(distance_scan_serial(p, q, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DistanceScanParallel(benchmark::State& state) {
  const RealNumberRep p = RealNumberRep::parse("sqrt(2)"), q = RealNumberRep::parse("sqrt(3)");
  for (auto _ : state) benchmark::DoNotOptimize(distance_scan(p, q, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_LatticeSumSerial)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LatticeSumParallel)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceScanSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceScanParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
