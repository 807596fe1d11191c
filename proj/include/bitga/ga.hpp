#pragma once

/// @file ga.hpp
/// OneMax genetic algorithm: stochastic universal sampling, the per-generation
/// control loop in simple and binomial-optimized form, and a run driver.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bitga/binomial.hpp"
#include "bitga/bitvector.hpp"
#include "bitga/operators.hpp"
#include "bitga/rng.hpp"

namespace bitga {

using Fitness = std::int64_t;

inline Fitness oneMaxFitness(const BitVector& v) { return static_cast<Fitness>(v.popcount()); }

/// Genomes with their cached OneMax fitness; fitness[i] matches members[i]
/// after evaluate().
struct Population {
  std::vector<BitVector> members;
  std::vector<Fitness> fitness;

  std::size_t size() const { return members.size(); }
  void evaluate();
};

template <UniformSource S>
Population randomPopulation(std::size_t size, std::size_t genome_bits, S& src) {
  Population pop;
  pop.members.reserve(size);
  for (std::size_t i = 0; i < size; ++i) pop.members.push_back(randomVector(genome_bits, src));
  pop.evaluate();
  return pop;
}

/// One spin of a wheel with fitness.size() equally spaced pointers. Returns the
/// selected indices in wheel order. Zero total fitness selects uniformly.
template <UniformSource S>
std::vector<std::size_t> susSelectIndices(std::span<const Fitness> fitness, S& src) {
  const std::size_t n = fitness.size();
  std::vector<std::size_t> chosen;
  chosen.reserve(n);
  if (n == 0) return chosen;

  Fitness total = 0;
  for (Fitness f : fitness) {
    require(f >= 0, "susSelect: fitness values must be non-negative");
    total += f;
  }
  if (total == 0) {
    for (std::size_t i = 0; i < n; ++i) chosen.push_back(src.nextInt(static_cast<std::uint32_t>(n)));
    return chosen;
  }

  // Everything scaled by n so pointer spacing is the integer `total` and
  // segment j spans [n * cum(j), n * cum(j + 1)).
  const double scale = static_cast<double>(n);
  const double spacing = static_cast<double>(total);
  double pointer = src.nextReal() * spacing;
  std::size_t j = 0;
  double edge = scale * static_cast<double>(fitness[0]);
  for (std::size_t i = 0; i < n; ++i) {
    while (pointer >= edge && j + 1 < n) {
      ++j;
      edge += scale * static_cast<double>(fitness[j]);
    }
    chosen.push_back(j);
    pointer += spacing;
  }
  return chosen;
}

/// Stochastic universal sampling into `out`, then shuffled into random order.
/// `out` is reused so steady-state generations do not reallocate genomes.
template <UniformSource S>
void susSelect(const Population& pop, Population& out, S& src) {
  std::vector<std::size_t> chosen = susSelectIndices(std::span<const Fitness>(pop.fitness), src);
  shuffle(src, std::span<std::size_t>(chosen));
  out.members.resize(chosen.size());
  out.fitness.resize(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    out.members[i] = pop.members[chosen[i]];
    out.fitness[i] = pop.fitness[chosen[i]];
  }
}

template <UniformSource S>
Population susSelect(const Population& pop, S& src) {
  Population out;
  susSelect(pop, out, src);
  return out;
}

/// Pairs (i, i + n/2) for i < n/2, each crossed when a fresh uniform falls
/// below pc. Returns the number of crossover calls.
template <UniformSource S, class CrossFn>
std::size_t simpleCrossoverPhase(std::span<BitVector> members, double pc, CrossFn&& cross, S& src) {
  const std::size_t pairs = members.size() / 2;
  std::size_t crossed = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (src.nextReal() < pc) {
      cross(members[i], members[i + pairs]);
      ++crossed;
    }
  }
  return crossed;
}

/// Draws m from B(n/2, pc) once and crosses (i, i + m) for i < m. Valid
/// because the members arrive in random order.
template <UniformSource S, class CrossFn>
std::size_t optimizedCrossoverPhase(std::span<BitVector> members, const BinomialSampler& pair_sampler,
                                    CrossFn&& cross, S& src) {
  require(static_cast<std::size_t>(pair_sampler.n()) == members.size() / 2,
          "optimizedCrossoverPhase: sampler must cover floor(n/2) pairs");
  const auto crosses = static_cast<std::size_t>(pair_sampler(src));
  for (std::size_t i = 0; i < crosses; ++i) cross(members[i], members[i + crosses]);
  return crosses;
}

struct GenerationPlan {
  double pc = 0.0;
  MutationParams mutation;
  CrossoverKind crossover = UniformCrossoverParams{0.33};
};

void validate(const GenerationPlan& plan);

/// Selection, crossover decision per pair, per-bit mutation, evaluation.
template <UniformSource S>
void simpleGeneration(Population& pop, Population& scratch, const GenerationPlan& plan, S& src) {
  susSelect(pop, scratch, src);
  std::swap(pop, scratch);
  std::span<BitVector> members(pop.members);

  if (const auto* uniform = std::get_if<UniformCrossoverParams>(&plan.crossover)) {
    const double pu = uniform->pu;
    simpleCrossoverPhase(members, plan.pc,
                         [&](BitVector& a, BitVector& b) { simpleUniformCrossover(a, b, pu, src); }, src);
  } else if (std::holds_alternative<SinglePointCrossover>(plan.crossover)) {
    simpleCrossoverPhase(members, plan.pc, [&](BitVector& a, BitVector& b) { singlePointCrossover(a, b, src); },
                         src);
  } else {
    simpleCrossoverPhase(members, plan.pc, [&](BitVector& a, BitVector& b) { twoPointCrossover(a, b, src); },
                         src);
  }

  for (BitVector& v : pop.members) simpleMutation(v, plan.mutation.pm, src);
  pop.evaluate();
}

template <UniformSource S>
void simpleGeneration(Population& pop, const GenerationPlan& plan, S& src) {
  Population scratch;
  simpleGeneration(pop, scratch, plan, src);
}

/// The optimized generation with its binomial samplers built once per run.
class OptimizedGeneration {
 public:
  OptimizedGeneration(std::size_t genome_bits, std::size_t population_size, const GenerationPlan& plan);

  template <UniformSource S>
  void operator()(Population& pop, Population& scratch, S& src) const {
    susSelect(pop, scratch, src);
    std::swap(pop, scratch);
    std::span<BitVector> members(pop.members);

    if (uniform_sampler_) {
      const BinomialSampler& mask_sampler = *uniform_sampler_;
      optimizedCrossoverPhase(
          members, pair_sampler_,
          [&](BitVector& a, BitVector& b) { optimizedUniformCrossover(a, b, mask_sampler, src); }, src);
    } else if (std::holds_alternative<SinglePointCrossover>(plan_.crossover)) {
      optimizedCrossoverPhase(members, pair_sampler_,
                              [&](BitVector& a, BitVector& b) { singlePointCrossover(a, b, src); }, src);
    } else {
      optimizedCrossoverPhase(members, pair_sampler_,
                              [&](BitVector& a, BitVector& b) { twoPointCrossover(a, b, src); }, src);
    }

    for (BitVector& v : pop.members) optimizedMutation(v, mutation_sampler_, src);
    pop.evaluate();
  }

 private:
  GenerationPlan plan_;
  BinomialSampler pair_sampler_;
  BinomialSampler mutation_sampler_;
  std::optional<BinomialSampler> uniform_sampler_;
};

template <UniformSource S>
void optimizedGeneration(Population& pop, const GenerationPlan& plan, S& src) {
  require(!pop.members.empty(), "optimizedGeneration: population is empty");
  OptimizedGeneration step(pop.members.front().length(), pop.size(), plan);
  Population scratch;
  step(pop, scratch, src);
}

enum class Variant { Simple, Optimized };

const char* toString(Variant variant);

struct GAConfig {
  std::size_t genome_bits = 1024;
  std::size_t population_size = 100;
  double pc = 0.95;
  MutationParams mutation{1.0 / 1024.0};
  CrossoverKind crossover = UniformCrossoverParams{0.33};
  std::size_t generations = 1000;
  std::uint64_t seed = 0;
  bool record_trace = false;

  GenerationPlan plan() const { return {pc, mutation, crossover}; }
};

/// Throws ContractViolation naming the offending field.
void validate(const GAConfig& config);

struct RunResult {
  Fitness best_fitness = 0;
  BitVector best_genome;
  /// Best-ever fitness after initialization and after each generation; only
  /// filled when GAConfig::record_trace is set.
  std::vector<Fitness> per_generation_best;
};

/// Runs the GA drawing from `src`; config.seed is ignored.
template <UniformSource S>
RunResult runGA(const GAConfig& config, Variant variant, S& src) {
  validate(config);
  Population pop = randomPopulation(config.population_size, config.genome_bits, src);
  Population scratch;
  RunResult result;

  auto track_best = [&] {
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (result.best_genome.length() == 0 || pop.fitness[i] > result.best_fitness) {
        result.best_fitness = pop.fitness[i];
        result.best_genome = pop.members[i];
      }
    }
    if (config.record_trace) result.per_generation_best.push_back(result.best_fitness);
  };
  track_best();

  const GenerationPlan plan = config.plan();
  if (variant == Variant::Simple) {
    for (std::size_t g = 0; g < config.generations; ++g) {
      simpleGeneration(pop, scratch, plan, src);
      track_best();
    }
  } else {
    const OptimizedGeneration step(config.genome_bits, config.population_size, plan);
    for (std::size_t g = 0; g < config.generations; ++g) {
      step(pop, scratch, src);
      track_best();
    }
  }
  return result;
}

/// Deterministic in config.seed.
RunResult runGA(const GAConfig& config, Variant variant);

}  // namespace bitga
