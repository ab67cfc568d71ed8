#include <benchmark/benchmark.h>

#include "dynforge/fitness.hpp"
#include "dynforge/ga.hpp"

using namespace dynforge;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

const Orbit kPolyDeg4{MapFlavor::Polynomial, 4, ints({0, 3, 4, 5, 1, -1})};
const Orbit kRationalDeg4{MapFlavor::Rational, 4,
                          ints({0, -1, -4, -3, -9, 2, -6, -2, -5, 1})};
const Orbit kPreperiodic{MapFlavor::Polynomial, 2, ints({0, 1, -1, 2})};

void BM_InterpolatePolynomial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_to_map(kPolyDeg4));
  }
}
BENCHMARK(BM_InterpolatePolynomial);

void BM_InterpolateRational(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_to_map(kRationalDeg4));
  }
}
BENCHMARK(BM_InterpolateRational);

void BM_Evaluate(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kPolyDeg4);
  const ProjPoint p(Integer(355), Integer(113));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.evaluate(p));
  }
}
BENCHMARK(BM_Evaluate);

void BM_Iterate8(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kPreperiodic);
  const ProjPoint p(Integer(2), Integer(7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.iterate(p, 8));
  }
}
BENCHMARK(BM_Iterate8);

void BM_SigmaInvariants(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kPolyDeg4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_invariants(f));
  }
}
BENCHMARK(BM_SigmaInvariants);

void BM_GapConstant(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kRationalDeg4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(height_gap_constant(f));
  }
}
BENCHMARK(BM_GapConstant);

void BM_ClassifyOrbit(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kPreperiodic);
  const ProjPoint zero(Integer(0), Integer(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_orbit(f, zero));
  }
}
BENCHMARK(BM_ClassifyOrbit);

void BM_CanonicalHeight(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kPolyDeg4);
  const ProjPoint zero(Integer(0), Integer(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_height(f, zero, 1e-6));
  }
}
BENCHMARK(BM_CanonicalHeight);

void BM_CensusFast(benchmark::State& state) {
  const DynSystem f = orbit_to_map(kPreperiodic);
  for (auto _ : state) {
    benchmark::DoNotOptimize(preperiodic_census(f, CensusParams::fast()));
  }
}
BENCHMARK(BM_CensusFast);

void BM_FitnessInterior(benchmark::State& state) {
  const FitnessOptions profile = FitnessOptions::search_profile();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        evaluate_fitness(kPolyDeg4, FitnessTarget::Cycle, profile));
  }
}
BENCHMARK(BM_FitnessInterior);

void BM_Generation(benchmark::State& state) {
  GAConfig config;
  config.map_type = MapFlavor::Polynomial;
  config.degree = 2;
  config.population = 64;
  config.bound = 20;
  config.target = FitnessTarget::Cycle;
  const FitnessOptions profile = FitnessOptions::search_profile();
  Xoshiro256ss rng(1);
  std::vector<Individual> pop;
  for (int i = 0; i < config.population; ++i) {
    Individual ind;
    ind.orbit = random_orbit(config, rng);
    ind.score = evaluate_fitness(ind.orbit, config.target, profile);
    pop.push_back(std::move(ind));
  }
  for (auto _ : state) {
    auto copy = pop;
    benchmark::DoNotOptimize(step_generation(copy, config, rng, profile, 1));
  }
}
BENCHMARK(BM_Generation);

}  // namespace

BENCHMARK_MAIN();
