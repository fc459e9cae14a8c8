#include <benchmark/benchmark.h>

#include "nt/dioph.hpp"
#include "nt/hyper_engine.hpp"
#include "nt/hyper_factor.hpp"
#include "nt/lseries.hpp"
#include "nt/modarith.hpp"

namespace {

void BM_HyperEvalTower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nt::hyper_eval(4, 3, nt::OrderSpec::right(), 2));
}
BENCHMARK(BM_HyperEvalTower);

void BM_StructureFlatten(benchmark::State& state) {
  const auto flat = nt::parse_hyper("x o2^1 x o2^0 x o2^5 y o2^4 z o2^6 x o2^2 y");
  for (auto _ : state) benchmark::DoNotOptimize(nt::flatten(nt::structure(flat)));
}
BENCHMARK(BM_StructureFlatten);

void BM_Hyper3Factorize(benchmark::State& state) {
  const nt::BigInt n("2176782336");
  for (auto _ : state) benchmark::DoNotOptimize(nt::hyper_factorize(n, 3));
}
BENCHMARK(BM_Hyper3Factorize);

void BM_ExpPrimeRange(benchmark::State& state) {
  const auto hi = state.range(0);
  for (auto _ : state) {
    std::int64_t count = 0;
    for (std::int64_t q = 1; q <= hi; ++q) count += nt::is_exp_prime(q);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_ExpPrimeRange)->Arg(1000)->Arg(10000);

void BM_Sieve(benchmark::State& state) {
  const auto op = nt::parse_op_expr("x^2+y^2", 2);
  const auto hi = state.range(0);
  const auto b = nt::default_bounds(op, 1, hi);
  for (auto _ : state) benchmark::DoNotOptimize(nt::sieve(op, 1, hi, b));
  state.SetItemsProcessed(state.iterations() * hi);
}
BENCHMARK(BM_Sieve)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PowerSieve28(benchmark::State& state) {
  const auto op = nt::parse_op_expr("x^y", 2);
  const auto b = nt::default_bounds(op, 1, 28);
  for (auto _ : state) benchmark::DoNotOptimize(nt::sieve(op, 1, 28, b));
}
BENCHMARK(BM_PowerSieve28);

void BM_FourSquares(benchmark::State& state) {
  const auto op = nt::parse_op_expr("x1^2+x2^2+x3^2+x4^2", 4, {}, nt::DomainSpec::naturals0());
  const auto hi = state.range(0);
  const auto b = nt::default_bounds(op, 1, hi);
  for (auto _ : state) benchmark::DoNotOptimize(nt::representable_range(op, 1, hi, b));
}
BENCHMARK(BM_FourSquares)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_TacCoefficients(benchmark::State& state) {
  const auto op = nt::parse_op_expr("x*y", 2);
  const auto n = state.range(0);
  const auto b = nt::default_bounds(op, 1, n);
  const auto leaves = nt::comb_leaves(op, n, b);
  for (auto _ : state) benchmark::DoNotOptimize(nt::coeff_table(nt::gen_TAC(op, leaves, n, 64, b), n, "TAC"));
}
BENCHMARK(BM_TacCoefficients)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ZetaExact(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nt::zeta_partial("2", state.range(0)));
}
BENCHMARK(BM_ZetaExact)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FermatKxyCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(nt::fermat_kxy_check(7, 13, 499));
}
BENCHMARK(BM_FermatKxyCheck);

void BM_CongruentMultiplicative(benchmark::State& state) {
  const auto f = nt::parse_op_expr("k*x*y", 2, {{"k", 3}}, nt::DomainSpec::integers());
  const nt::CongruenceQuery q{7776, 6, 5, nt::addition_pair(), f};
  const auto b = nt::default_bounds(f, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(nt::congruent(q, b));
}
BENCHMARK(BM_CongruentMultiplicative);

}  // namespace

BENCHMARK_MAIN();
