#include <benchmark/benchmark.h>

#include <random>

#include "adnrg/ball.hpp"
#include "adnrg/carries.hpp"
#include "adnrg/compression.hpp"
#include "adnrg/energy.hpp"
#include "adnrg/sampling.hpp"

using namespace adnrg;

namespace {

std::vector<LatticeSet> random_family(std::size_t k, Coord half_width, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const BoxShape box({half_width, half_width});
  std::vector<LatticeSet> sets;
  for (std::size_t i = 0; i < k; ++i) sets.push_back(random_subset(box, size, rng));
  return sets;
}

void BM_EnergyBruteforce(benchmark::State& state) {
  const auto sets = random_family(4, 6, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(energy_bruteforce(sets).value);
}
BENCHMARK(BM_EnergyBruteforce)->Arg(10)->Arg(20)->Arg(40);

void BM_EnergyFast(benchmark::State& state) {
  const auto sets = random_family(4, 6, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(energy_fast(sets).value);
}
BENCHMARK(BM_EnergyFast)->Arg(10)->Arg(20)->Arg(40)->Arg(160);

void BM_Compress(benchmark::State& state) {
  const auto a = random_family(1, 20, static_cast<std::size_t>(state.range(0)), 2).front();
  for (auto _ : state) benchmark::DoNotOptimize(compress(a, 0).size());
}
BENCHMARK(BM_Compress)->Arg(100)->Arg(1000);

void BM_DownsetTransform(benchmark::State& state) {
  const auto a = random_family(1, 20, static_cast<std::size_t>(state.range(0)), 3).front();
  for (auto _ : state) benchmark::DoNotOptimize(downset_transform(a).size());
}
BENCHMARK(BM_DownsetTransform)->Arg(100)->Arg(1000);

void BM_LensVolume(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lens_volume(d, 1.0, 0.8, 0.3 + t));
    t = t < 1.0 ? t + 1e-3 : 0.0;
  }
}
BENCHMARK(BM_LensVolume)->Arg(2)->Arg(3)->Arg(6);

void BM_BallE4Quadrature(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(energy_constant_e(2).value);
}
BENCHMARK(BM_BallE4Quadrature);

void BM_CarriesExhaustive(benchmark::State& state) {
  const auto b = static_cast<Coord>(state.range(0));
  const auto window = default_window(b, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(b, 1, window).best_c);
}
BENCHMARK(BM_CarriesExhaustive)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
