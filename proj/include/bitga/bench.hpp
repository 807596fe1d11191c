#pragma once

/// @file bench.hpp
/// Simple-vs-optimized comparison harness: timed mutation, uniform crossover and
/// whole-GA experiments, Welch t-tests over per-trial measurements, CSV output.
///
/// Timed regions are single-threaded and alternate variants trial by trial.
/// Counting mode replaces timing with per-operation RNG call counts; those runs
/// are deterministic, untimed and fanned out over OpenMP threads.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bitga/ga.hpp"
#include "bitga/operators.hpp"

namespace bitga::bench {

struct Profile {
  std::size_t trials;
  std::size_t ops_per_trial;
  std::size_t ga_trials;
};

inline constexpr Profile kQuickProfile{30, 10000, 30};
inline constexpr Profile kFullProfile{100, 100000, 100};

/// Optimized-variant trials are seeded seed + kOptimizedSeedOffset + t so the
/// two variants are independent samples.
inline constexpr std::uint64_t kOptimizedSeedOffset = 1'000'000'007ULL;

std::uint64_t trialSeed(std::uint64_t base_seed, Variant variant, std::size_t trial);

/// Mean draws per operation (per run for GA experiments).
struct RngCounts {
  double real = 0.0;
  double integer = 0.0;
  double block = 0.0;
};

struct ComparisonRow {
  std::string experiment;  // "mutation", "crossover" or "ga:<crossover>"
  std::size_t n = 0;
  std::string param_name;
  double param_value = 0.0;
  // Timing; absent in counting mode.
  std::optional<double> mean_simple;
  std::optional<double> mean_optimized;
  std::optional<double> percent_less;
  std::optional<double> p_time;  // absent when trials < 2
  // GA only.
  std::optional<double> mean_solution_simple;
  std::optional<double> mean_solution_optimized;
  std::optional<double> p_solution;
  // Counting mode only.
  std::optional<RngCounts> counts_simple;
  std::optional<RngCounts> counts_optimized;
};

struct MutationBenchConfig {
  std::vector<std::size_t> lengths{16, 32, 64, 128, 256, 512, 1024};
  std::vector<double> rates;  // empty: defaultMutationRates(n) per length
  std::size_t ops_per_trial = kQuickProfile.ops_per_trial;
  std::size_t trials = kQuickProfile.trials;
  std::uint64_t seed = 42;
  bool count_rng = false;
};

struct CrossoverBenchConfig {
  std::vector<std::size_t> lengths{16, 32, 64, 128, 256, 512, 1024};
  std::vector<double> pus{0.1, 0.2, 0.3, 0.4, 0.5};
  std::size_t ops_per_trial = kQuickProfile.ops_per_trial;
  std::size_t trials = kQuickProfile.trials;
  std::uint64_t seed = 42;
  bool count_rng = false;
};

struct GABenchConfig {
  CrossoverKind crossover = UniformCrossoverParams{0.33};
  std::vector<double> pcs{0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
  std::size_t genome_bits = 1024;
  std::size_t population_size = 100;
  std::optional<double> pm;  // default 1 / genome_bits
  std::size_t generations = 1000;
  std::size_t trials = kQuickProfile.ga_trials;
  std::uint64_t seed = 42;
  bool count_rng = false;
};

/// {1/n, 2/n, 4/n, ...} up to and including 1/4.
std::vector<double> defaultMutationRates(std::size_t n);

std::vector<ComparisonRow> runMutationBench(const MutationBenchConfig& config);
std::vector<ComparisonRow> runCrossoverBench(const CrossoverBenchConfig& config);
std::vector<ComparisonRow> runGABench(const GABenchConfig& config);

/// Best-ever fitness of `trials` independent, untimed runs of one variant,
/// run in parallel. Trial t uses trialSeed(base_seed, variant, t).
std::vector<double> solutionQualityTrials(const GAConfig& config, Variant variant, std::size_t trials,
                                          std::uint64_t base_seed);

std::vector<std::string> csvHeader(bool with_counts);
void emitCsv(const std::vector<ComparisonRow>& rows, std::ostream& out);
/// Throws std::runtime_error naming `path` if it cannot be written.
void emitCsv(const std::vector<ComparisonRow>& rows, const std::filesystem::path& path);
/// Reads back what emitCsv wrote.
std::vector<ComparisonRow> parseCsv(std::istream& in);

}  // namespace bitga::bench
