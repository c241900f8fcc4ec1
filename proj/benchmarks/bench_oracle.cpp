#include <benchmark/benchmark.h>

#include "tanint/oracle.hpp"
#include "tanint/series.hpp"

namespace {

void BM_QuadPowTan(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  tanint::NumericContext ctx(digits);
  const tanint::Real zero(0L, ctx.prec());
  const tanint::Real quarter_pi = mul_2si(ctx.pi(), -2);
  for (auto _ : state) {
    auto v = tanint::quad(tanint::PowTanIntegrand{8, 3}, zero, quarter_pi, ctx);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_QuadPowTan)->Arg(15)->Arg(30)->Arg(50);

void BM_EvalNumeric(benchmark::State& state) {
  tanint::MemoTable memo;
  tanint::NumericContext ctx(50);
  const tanint::SymValue v = tanint::compute(40, 5, memo);
  tanint::eval_numeric(v, ctx);
  for (auto _ : state) {
    auto x = tanint::eval_numeric(v, ctx);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_EvalNumeric);

void BM_JSeries(benchmark::State& state) {
  tanint::NumericContext ctx(30);
  tanint::MemoTable memo;
  const tanint::Real eps = tanint::Real::from_str("1e-10", ctx.prec());
  tanint::j_series(3, eps, 30, ctx, memo);
  for (auto _ : state) {
    auto enc = tanint::j_series(3, eps, 30, ctx, memo);
    benchmark::DoNotOptimize(enc);
  }
}
BENCHMARK(BM_JSeries);

}  // namespace
