#include "bitga/ga.hpp"

#include <cstdio>
#include <string>

namespace bitga {

std::string toString(const CrossoverKind& kind) {
  if (const auto* uniform = std::get_if<UniformCrossoverParams>(&kind)) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "uniform(%g)", uniform->pu);
    return buf;
  }
  return std::holds_alternative<SinglePointCrossover>(kind) ? "onepoint" : "twopoint";
}

const char* toString(Variant variant) { return variant == Variant::Simple ? "simple" : "optimized"; }

void Population::evaluate() {
  fitness.resize(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) fitness[i] = oneMaxFitness(members[i]);
}

void validate(const GenerationPlan& plan) {
  checkProbability(plan.pc, "crossover rate pc must lie in [0, 1]");
  checkProbability(plan.mutation.pm, "mutation rate pm must lie in [0, 1]");
  if (const auto* uniform = std::get_if<UniformCrossoverParams>(&plan.crossover)) {
    checkProbability(uniform->pu, "uniform crossover pu must lie in [0, 1]");
  }
}

void validate(const GAConfig& config) {
  require(config.genome_bits >= 2, "genome_bits must be at least 2");
  require(config.population_size >= 2, "population_size must be at least 2");
  require(config.population_size % 2 == 0, "population_size must be even");
  require(config.generations >= 1, "generations must be positive");
  validate(config.plan());
}

OptimizedGeneration::OptimizedGeneration(std::size_t genome_bits, std::size_t population_size,
                                         const GenerationPlan& plan)
    : plan_(plan),
      pair_sampler_(static_cast<std::int64_t>(population_size / 2), plan.pc),
      mutation_sampler_(static_cast<std::int64_t>(genome_bits), plan.mutation.pm) {
  validate(plan);
  if (const auto* uniform = std::get_if<UniformCrossoverParams>(&plan.crossover)) {
    uniform_sampler_.emplace(static_cast<std::int64_t>(genome_bits), uniform->pu);
  }
}

RunResult runGA(const GAConfig& config, Variant variant) {
  RandomSource src(config.seed);
  return runGA(config, variant, src);
}

}  // namespace bitga
