// Serial reference vs OpenMP kernels on the exhaustive sums and scans.
// Run with OMP_NUM_THREADS set to the core count of interest.

#include <benchmark/benchmark.h>

#include "qtcat/bijections.hpp"
#include "qtcat/generating.hpp"

using namespace qtcat;
using kernels::Backend;

namespace {

Backend backend_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Backend::serial : Backend::openmp;
}

void label(benchmark::State& state) { state.SetLabel(state.range(1) == 0 ? "serial" : "openmp"); }

void BM_APoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a_poly(n, {}, backend_of(state)));
  label(state);
}

void BM_CatQt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cat_qt(n, {}, backend_of(state)));
  label(state);
}

// Kernel only: enumeration hoisted out of the timed loop.
void BM_InvAreaScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = enumerate_avoiders(n, Pattern::p231);
  auto holds = [](const Permutation& s) { return inversions(s) == area(psi_complement(phi_unchecked(s))); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::find_first_violation(std::span<const Permutation>(perms), holds, backend_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(perms.size()));
  label(state);
}

void BM_PhiTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto perms = enumerate_avoiders(n, Pattern::p231);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::transform(std::span<const Permutation>(perms), phi_unchecked, backend_of(state)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(perms.size()));
  label(state);
}

}  // namespace

BENCHMARK(BM_APoly)->ArgsProduct({{10, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatQt)->ArgsProduct({{10, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InvAreaScan)->ArgsProduct({{10, 11}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhiTransform)->ArgsProduct({{10, 11}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
