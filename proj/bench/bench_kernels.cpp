// Parallel kernels against their serial references. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "elw/admissibility.hpp"
#include "elw/catalog.hpp"
#include "oracles.hpp"

namespace {

using namespace elw;

void BM_EnumerateHe(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto bound = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(admissibility::enumerate_he(n, bound));
}

void BM_EnumerateHeSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto bound = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(admissibility::enumerate_he_serial(n, bound));
}

std::vector<CycleCatalog> catalogs(std::size_t count) {
  std::mt19937_64 rng(3);
  std::vector<CycleCatalog> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(oracle::random_catalog(rng, {8, 24, 1000000}));
  return out;
}

void BM_ElwSequences(benchmark::State& state) {
  const auto input = catalogs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elw_sequences(input));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ElwSequencesSerial(benchmark::State& state) {
  const auto input = catalogs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elw_sequences_serial(input));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_EnumerateHe)->Args({2, 500})->Args({3, 300})->Args({4, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateHeSerial)->Args({2, 500})->Args({3, 300})->Args({4, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElwSequences)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ElwSequencesSerial)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
