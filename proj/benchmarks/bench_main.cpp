#include <benchmark/benchmark.h>

#include <random>

#include "gha/fixtures.hpp"
#include "gha/hopf.hpp"
#include "gha/multiplier.hpp"
#include "gha/sweep.hpp"

using namespace gha;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 3 == 0) {
        Scalar v(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5);
        v.canonicalize();
        m.set(i, j, v);
      }
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

static void BM_Psi2(benchmark::State& state) {
  const Fixture f = canonical_fixture(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(psi2_image(f.algebra).rank());
}
BENCHMARK(BM_Psi2)->DenseRange(3, 6);

static void BM_Dimensions(benchmark::State& state) {
  const Fixture f = canonical_fixture(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_dimensions(f.algebra).multiplier);
}
BENCHMARK(BM_Dimensions)->DenseRange(3, 6);

static void BM_HopfOracle(benchmark::State& state) {
  const Fixture f = canonical_fixture(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    const FreePresentation p = presentation_from_class2(f.algebra);
    benchmark::DoNotOptimize(hopf_multiplier_dim(p));
  }
}
BENCHMARK(BM_HopfOracle)->DenseRange(3, 6);

static void BM_Cover(benchmark::State& state) {
  const Fixture f = canonical_fixture(static_cast<std::size_t>(state.range(0)), 1);
  const FreePresentation p = presentation_from_class2(f.algebra);
  for (auto _ : state) benchmark::DoNotOptimize(cover_construct(p).algebra.dim());
}
BENCHMARK(BM_Cover)->DenseRange(3, 6);

static void BM_DefaultSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep({}).summary.comparisons);
}
BENCHMARK(BM_DefaultSweep)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
