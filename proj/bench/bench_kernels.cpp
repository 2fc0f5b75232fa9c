// Serial reference kernels against their OpenMP counterparts.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cuspcheck/blowup.hpp"
#include "cuspcheck/indicial.hpp"
#include "cuspcheck/moments.hpp"

namespace {

using namespace cuspcheck;

// Two tower rounds on the 3-simplex: many facets, many simplices.
DelzantPolytope tower_polytope() {
  const auto p = standard_simplex(3);
  auto s = TowerState::start(p, p.find_facet("hyp"));
  s = tower_step(s, Rational(1, 4));
  s = tower_step(s, Rational(1, 32));
  return s.polytope;
}

std::vector<SpectralPair> random_spectrum(std::size_t count) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  std::vector<SpectralPair> pairs(count);
  for (auto& p : pairs) {
    p.lambda = dist(rng);
    p.mu = dist(rng);
  }
  return pairs;
}

void BM_MomentsSerial(benchmark::State& state) {
  const auto p = tower_polytope();
  for (auto _ : state) benchmark::DoNotOptimize(serial::polytope_moments(p));
}

void BM_MomentsParallel(benchmark::State& state) {
  const auto p = tower_polytope();
  for (auto _ : state) benchmark::DoNotOptimize(polytope_moments(p));
}

void BM_WindowSerial(benchmark::State& state) {
  const auto pairs = random_spectrum(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::roots_in_window(pairs, -2.0, 3.0));
}

void BM_WindowParallel(benchmark::State& state) {
  const auto pairs = random_spectrum(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(roots_in_window(pairs, -2.0, 3.0));
}

}  // namespace

BENCHMARK(BM_MomentsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MomentsParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WindowParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
