// Serial reference kernels against their OpenMP counterparts.
//   build/bench/bench_kernels --benchmark_filter=Census

#include <benchmark/benchmark.h>

#include <omp.h>

#include "sqpaths/kernels.hpp"
#include "sqpaths/schedules.hpp"

using namespace sqpaths;

namespace {

int max_threads() { return omp_get_max_threads(); }

void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(n).entries.data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pref_count(n)));
}

void BM_CensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_parallel(n, max_threads()).entries.data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pref_count(n)));
}

const PrefPredicate kParking = [](const PrefFunc&, const StatRecord& s) { return s.parking; };
const KeyFn kTouch = [](const PrefFunc&, const StatRecord& s) { return std::int64_t{s.touch}; };

void BM_ParkingTallySerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_tally_serial(n, kParking).size());
}

void BM_ParkingTallyParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weighted_tally_parallel(n, max_threads(), kParking).size());
}

void BM_TouchTallySerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(keyed_tally_serial(n, kTouch).size());
}

void BM_TouchTallyParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(keyed_tally_parallel(n, max_threads(), kTouch).size());
}

void BM_DiagwordSerial(benchmark::State& state) {
  const Perm tau = parse_perm("3715264");
  for (auto _ : state) benchmark::DoNotOptimize(diagword_tally_serial(tau).size());
}

void BM_DiagwordParallel(benchmark::State& state) {
  const Perm tau = parse_perm("3715264");
  for (auto _ : state) benchmark::DoNotOptimize(diagword_tally_parallel(tau, max_threads()).size());
}

}  // namespace

BENCHMARK(BM_CensusSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ParkingTallySerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ParkingTallyParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TouchTallySerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TouchTallyParallel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DiagwordSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiagwordParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
