#include <benchmark/benchmark.h>

#include "tanint/engine.hpp"

namespace {

void BM_ComputeColdTable(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const int p_max = static_cast<int>(state.range(1));
  for (auto _ : state) {
    tanint::MemoTable memo;
    auto rows = tanint::table(n_max, p_max, memo);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_ComputeColdTable)->Args({20, 2})->Args({50, 4})->Args({100, 6});

void BM_ComputeMemoHit(benchmark::State& state) {
  tanint::MemoTable memo;
  tanint::compute(100, 6, memo);
  for (auto _ : state) {
    auto v = tanint::compute(100, 6, memo);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ComputeMemoHit);

void BM_TanPowerClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto v = tanint::tan_power_integral(n);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TanPowerClosedForm)->Arg(10)->Arg(100)->Arg(1000);

}  // namespace
