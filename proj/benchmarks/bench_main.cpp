// Microbenchmarks for the hot paths: polynomial arithmetic, plethysms,
// pairings, and kernel assembly. Block solving is cached process-wide, so
// only the cached lookup is measured here; cold solve times are visible via
// the WMP_TRACE environment variable on any block-touching run.

#include <benchmark/benchmark.h>

#include "wmp/field.hpp"
#include "wmp/maya.hpp"
#include "wmp/mpoly.hpp"
#include "wmp/multisym.hpp"
#include "wmp/schur.hpp"
#include "wmp/vertex.hpp"
#include "wmp/wreath.hpp"

namespace {

using namespace wmp;

MPoly bivariate_sample(int e) {
  const MPoly t1 = MPoly::variable(Var::t1);
  const MPoly t2 = MPoly::variable(Var::t2);
  return (MPoly(Rational(1)) + t1 + t2).pow(e) +
         (MPoly(Rational(1)) - t1 * t2).pow(e);
}

MultiSym colored_sample(int l, int deg) {
  MultiSym f = MultiSym::one(l);
  for (int n = 1; n <= deg; ++n)
    f *= MultiSym::one(l) +
         MultiSym::generator(l, Gen{Alphabet::X, n % l, n}).scaled(
             FieldElem::var_pow(Var::t1, n));
  return f.truncated(deg);
}

void bm_mpoly_mul(benchmark::State& state) {
  const MPoly a = bivariate_sample(static_cast<int>(state.range(0)));
  const MPoly b = bivariate_sample(static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_mpoly_mul)->Arg(8)->Arg(16)->Arg(32);

void bm_mpoly_exact_divide(benchmark::State& state) {
  const MPoly a = bivariate_sample(static_cast<int>(state.range(0)));
  const MPoly b = bivariate_sample(static_cast<int>(state.range(0)) / 2);
  const MPoly prod = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(try_exact_divide(prod, b));
}
BENCHMARK(bm_mpoly_exact_divide)->Arg(8)->Arg(16)->Arg(32);

void bm_field_inverse(benchmark::State& state) {
  const FieldElem f = FieldElem::from_poly(bivariate_sample(6)) /
                      FieldElem::from_poly(bivariate_sample(5));
  for (auto _ : state) benchmark::DoNotOptimize(f.inverse() + f);
}
BENCHMARK(bm_field_inverse);

void bm_gamma_roundtrip(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const MultiSym f = colored_sample(l, 4);
  const FieldElem t1 = FieldElem::variable(Var::t1);
  for (auto _ : state) benchmark::DoNotOptimize(gamma(gamma(f, t1), t1, true));
}
BENCHMARK(bm_gamma_roundtrip)->Arg(2)->Arg(3);

void bm_wreath_pairing(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const MultiSym f = colored_sample(l, 4);
  for (auto _ : state) benchmark::DoNotOptimize(wreath_pairing(f, f));
}
BENCHMARK(bm_wreath_pairing)->Arg(1)->Arg(2);

void bm_multischur_expand(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const MultiSym f = colored_sample(l, 4);
  for (auto _ : state) benchmark::DoNotOptimize(to_multischur_coeffs(f));
}
BENCHMARK(bm_multischur_expand)->Arg(2)->Arg(3);

void bm_main_kernel(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(main_kernel(l, 2));
}
BENCHMARK(bm_main_kernel)->Arg(1)->Arg(2);

void bm_core_quotient_roundtrip(benchmark::State& state) {
  const std::vector<Partition> tens = all_partitions(10);
  for (auto _ : state)
    for (const Partition& lam : tens)
      benchmark::DoNotOptimize(from_core_quotient(core_quotient(lam, 3)));
}
BENCHMARK(bm_core_quotient_roundtrip);

void bm_wreath_h_cached(benchmark::State& state) {
  const Partition lam(std::vector<int>{2, 1, 1});
  benchmark::DoNotOptimize(wreath_h(lam, 2)); // warm the block cache
  for (auto _ : state) benchmark::DoNotOptimize(wreath_h(lam, 2));
}
BENCHMARK(bm_wreath_h_cached);

} // namespace

BENCHMARK_MAIN();
