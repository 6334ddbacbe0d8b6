// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "qjlab/finring.hpp"
#include "qjlab/construct.hpp"
#include "qjlab/harness.hpp"

using namespace qjlab;

namespace {

const harness::Catalog& catalog() {
  static const auto c = harness::build_catalog(harness::default_recipe());
  return c;
}

void BM_SuiteParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::run(catalog()).failure_count());
}

void BM_SuiteSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_serial(catalog()).failure_count());
}

// Z(+)Z primary falls through to bounded search.
void BM_SymSearchParallel(benchmark::State& state) {
  const zsym::Engine e;
  const auto R = zsym::SymRing::idealization_z();
  const auto I = zsym::idl_ideal(R, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(e.search(R, I, "primary", static_cast<int>(state.range(0))));
}

void BM_SymSearchSerial(benchmark::State& state) {
  const zsym::Engine e;
  const auto R = zsym::SymRing::idealization_z();
  const auto I = zsym::idl_ideal(R, 4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(e.search_serial(R, I, "primary", static_cast<int>(state.range(0))));
}

void BM_AxiomsParallel(benchmark::State& state) {
  const auto R = construct::product(construct::zmod(12), construct::zmod(16));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        finring::check_axioms(R->order(), R->add_table(), R->mul_table(), R->zero(), R->one()));
}

void BM_AxiomsSerial(benchmark::State& state) {
  const auto R = construct::product(construct::zmod(12), construct::zmod(16));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        finring::check_axioms_serial(R->order(), R->add_table(), R->mul_table(), R->zero(), R->one()));
}

}  // namespace

BENCHMARK(BM_SuiteParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SuiteSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymSearchParallel)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SymSearchSerial)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AxiomsSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
