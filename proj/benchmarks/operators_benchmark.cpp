// Microbenchmarks of the simple (per-bit) operators against their binomial
// counterparts. Run with --benchmark_filter to pick a family.

#include <benchmark/benchmark.h>

#include "bitga/ga.hpp"
#include "bitga/operators.hpp"

namespace {

using namespace bitga;

// Rates are passed as the denominator d in p = 1/d, or 2 for p = 0.5.
double rateOf(const benchmark::State& state) { return 1.0 / static_cast<double>(state.range(1)); }

void BM_SimpleMutation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double pm = rateOf(state);
  RandomSource src(1);
  auto v = randomVector(n, src);
  for (auto _ : state) {
    simpleMutation(v, pm, src);
    benchmark::DoNotOptimize(v);
  }
}

void BM_OptimizedMutation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinomialSampler sampler(static_cast<std::int64_t>(n), rateOf(state));
  RandomSource src(1);
  auto v = randomVector(n, src);
  for (auto _ : state) {
    optimizedMutation(v, sampler, src);
    benchmark::DoNotOptimize(v);
  }
}

void BM_SimpleUniformCrossover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double pu = rateOf(state);
  RandomSource src(2);
  auto a = randomVector(n, src);
  auto b = randomVector(n, src);
  for (auto _ : state) {
    simpleUniformCrossover(a, b, pu, src);
    benchmark::DoNotOptimize(a);
  }
}

void BM_OptimizedUniformCrossover(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const BinomialSampler sampler(static_cast<std::int64_t>(n), rateOf(state));
  RandomSource src(2);
  auto a = randomVector(n, src);
  auto b = randomVector(n, src);
  for (auto _ : state) {
    optimizedUniformCrossover(a, b, sampler, src);
    benchmark::DoNotOptimize(a);
  }
}

// range(0) is pc in percent.
GenerationPlan planFor(const benchmark::State& state) {
  return {static_cast<double>(state.range(0)) / 100.0, {1.0 / 1024}, UniformCrossoverParams{0.33}};
}

void BM_SimpleGeneration(benchmark::State& state) {
  const GenerationPlan plan = planFor(state);
  RandomSource src(3);
  auto pop = randomPopulation(100, 1024, src);
  Population scratch;
  for (auto _ : state) {
    simpleGeneration(pop, scratch, plan, src);
    benchmark::DoNotOptimize(pop.fitness.data());
  }
}

void BM_OptimizedGeneration(benchmark::State& state) {
  const GenerationPlan plan = planFor(state);
  const OptimizedGeneration step(1024, 100, plan);
  RandomSource src(3);
  auto pop = randomPopulation(100, 1024, src);
  Population scratch;
  for (auto _ : state) {
    step(pop, scratch, src);
    benchmark::DoNotOptimize(pop.fitness.data());
  }
}

void mutationArgs(benchmark::internal::Benchmark* b) {
  for (std::int64_t n : {64, 1024}) {
    for (std::int64_t d : {n, std::int64_t{16}, std::int64_t{4}}) b->Args({n, d});
  }
}

void crossoverArgs(benchmark::internal::Benchmark* b) {
  for (std::int64_t n : {64, 1024}) {
    for (std::int64_t d : {10, 3, 2}) b->Args({n, d});
  }
}

}  // namespace

BENCHMARK(BM_SimpleMutation)->Apply(mutationArgs);
BENCHMARK(BM_OptimizedMutation)->Apply(mutationArgs);
BENCHMARK(BM_SimpleUniformCrossover)->Apply(crossoverArgs);
BENCHMARK(BM_OptimizedUniformCrossover)->Apply(crossoverArgs);
BENCHMARK(BM_SimpleGeneration)->Arg(5)->Arg(50)->Arg(95);
BENCHMARK(BM_OptimizedGeneration)->Arg(5)->Arg(50)->Arg(95);

BENCHMARK_MAIN();
