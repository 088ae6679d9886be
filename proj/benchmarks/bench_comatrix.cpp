#include <benchmark/benchmark.h>

#include <random>

#include "comatrix/adjunction.hpp"
#include "comatrix/fixtures.hpp"
#include "comatrix/masuoka.hpp"

using namespace comatrix;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::int64_t> d(0, 6);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.from_int(d(rng)));
  return m;
}

void BM_RrefPrime(benchmark::State& state) {
  const Field f = Field::prime(7);
  Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->RangeMultiplier(2)->Range(8, 64);

void BM_RrefRational(benchmark::State& state) {
  Matrix m = random_matrix(Field::rationals(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->DenseRange(4, 12, 4);

void BM_EnumerateSubspaces(benchmark::State& state) {
  const Field f2 = Field::prime(2);
  EnumerationOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_subspaces(f2, static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_EnumerateSubspaces)->Args({6, 1})->Args({6, 4})->Args({7, 1})->Args({7, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_ComatrixCoring(benchmark::State& state) {
  Fixture fx = all_fixtures()[static_cast<std::size_t>(state.range(0))];
  FramedBimodule fr = fx.framed();
  for (auto _ : state) {
    ComatrixCoring c = build_comatrix_coring(fr);
    benchmark::DoNotOptimize(check_coring_axioms(*c.coring));
  }
  state.SetLabel(fx.name);
}
BENCHMARK(BM_ComatrixCoring)->DenseRange(0, 2);

void BM_CoringEndomorphisms(benchmark::State& state) {
  ComatrixCoring c = build_comatrix_coring(fixture_ex_free().framed());
  EnumerationSettings settings;
  settings.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coring_endomorphisms(c.coring, settings));
}
BENCHMARK(BM_CoringEndomorphisms)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EnumerateInv(benchmark::State& state) {
  Fixture fx = all_fixtures()[static_cast<std::size_t>(state.range(0))];
  FramedBimodule fr = fx.framed();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_inv(fr.endo));
  state.SetLabel(fx.name);
}
BENCHMARK(BM_EnumerateInv)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorems(benchmark::State& state) {
  Fixture fx = all_fixtures()[static_cast<std::size_t>(state.range(0))];
  FramedBimodule fr = fx.framed();
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorems(fr));
  state.SetLabel(fx.name);
}
BENCHMARK(BM_VerifyTheorems)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Adjunction(benchmark::State& state) {
  AdjunctionContext ctx = make_adjunction_context(fixture_ex_sweedler().framed());
  ComoduleSet set = standard_comodule_set(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(verify_adjunction(ctx, set));
}
BENCHMARK(BM_Adjunction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
