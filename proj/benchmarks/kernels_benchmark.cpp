// Serial reference vs OpenMP kernels. Thread count follows OMP_NUM_THREADS.
//
//   ./cyclemod_kernels_benchmark --benchmark_filter=Residues

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cyclemod/kernels.hpp"

namespace {

using cyclemod::InversionVariant;
using cyclemod::u128;
namespace kernels = cyclemod::kernels;

template <void (*Kernel)(const cyclemod::Modulus&, std::uint64_t, std::span<u128>, InversionVariant)>
void BM_Residues(benchmark::State& state) {
  const auto m = cyclemod::make_modulus(static_cast<unsigned>(state.range(0)));
  const auto variant = state.range(1) == 0 ? InversionVariant::euclid : InversionVariant::ct;
  std::vector<u128> out(1 << 16);
  for (auto _ : state) {
    Kernel(m, 1, out, variant);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <kernels::Histogram (*Kernel)(std::span<const u128>)>
void BM_Histogram(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<u128> values(static_cast<std::size_t>(state.range(0)));
  for (auto& v : values) v = rng() % 1000003;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(values));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <kernels::StepRange (*Kernel)(const cyclemod::Modulus&, std::uint64_t, std::uint64_t, InversionVariant)>
void BM_StepRange(benchmark::State& state) {
  const auto m = cyclemod::make_modulus(10);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m, 1, 39366, InversionVariant::euclid));
}

}  // namespace

BENCHMARK(BM_Residues<kernels::residues_serial>)->ArgsProduct({{5, 40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residues<kernels::residues_parallel>)->ArgsProduct({{5, 40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Histogram<kernels::histogram_serial>)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Histogram<kernels::histogram_parallel>)->Range(1 << 12, 1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepRange<kernels::step_range_serial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepRange<kernels::step_range_parallel>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
