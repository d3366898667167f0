// Microbenchmarks for the per-prime hot paths: context construction,
// series kernels, character sums and representation search.

#include <benchmark/benchmark.h>

#include "supercong/checkers.hpp"
#include "supercong/curve_count.hpp"
#include "supercong/legendre_poly.hpp"
#include "supercong/qseries.hpp"
#include "supercong/quadforms.hpp"
#include "supercong/runner.hpp"
#include "supercong/series_sums.hpp"

using namespace supercong;

namespace {

const u64 kPrime = 9973;

static void BM_BuildContext(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(PrimeContext::build(p, 6 * (p - 1)));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<i64>(6 * (p - 1)));
}
BENCHMARK(BM_BuildContext)->Arg(101)->Arg(1009)->Arg(9973);

static void BM_SeriesSum(benchmark::State& state) {
  const PrimeContext ctx = PrimeContext::build(kPrime, 6 * (kPrime - 1));
  const TermFamily family = static_cast<TermFamily>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        series_sum(family, -12288000, Weight::one(), kPrime - 1, ctx.p2(), ctx));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<i64>(kPrime));
}
BENCHMARK(BM_SeriesSum)
    ->Arg(static_cast<int>(TermFamily::CentralSq))
    ->Arg(static_cast<int>(TermFamily::FourK))
    ->Arg(static_cast<int>(TermFamily::SixK));

static void BM_LegendreRecurrence(benchmark::State& state) {
  const PrimeContext ctx = PrimeContext::build(kPrime, 6 * (kPrime - 1));
  u64 x = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        legendre_eval_recurrence((kPrime - 1) / 2, {x, ctx.p2()}, ctx, ctx.p2()));
    x += 2;
  }
}
BENCHMARK(BM_LegendreRecurrence);

static void BM_CharSum(benchmark::State& state) {
  const SymbolTable sym(kPrime);
  u64 t = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_sum(sym, CubicCurve{0, t % kPrime, (t * t + 1) % kPrime}));
    ++t;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<i64>(kPrime));
}
BENCHMARK(BM_CharSum);

static void BM_Cornacchia(benchmark::State& state) {
  const auto primes = sieve_primes(9000, 9973);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(represent(primes[i % primes.size()], forms::x2_3y2));
    ++i;
  }
}
BENCHMARK(BM_Cornacchia);

static void BM_EtaExpand(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expand(EtaProductSpec::eta_a(n)));
  }
}
BENCHMARK(BM_EtaExpand)->Arg(500)->Arg(2000);

static void BM_RunAll(benchmark::State& state) {
  const CheckConfig cfg;
  const u64 p = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_all(p, cfg));
  }
}
BENCHMARK(BM_RunAll)->Arg(101)->Arg(1009)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
