// bench: simple vs binomial-optimized GA operators, CSV on stdout or --out.
//
//   bench mutation  [--n 1024] [--pm 0.0009765625,0.25] [--ops N] [--trials N]
//   bench crossover [--n 1024] [--pu 0.1,0.5]
//   bench ga        [--crossover uniform|onepoint|twopoint] [--pu-for-uniform 0.33] [--pc 0.05,0.95]
//                   [--generations 1000] [--pop 100] [--pm 0.0009765625]
//
// Shared: --seed, --quick (default) | --paper, --count-rng, --out <path>.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bitga/bench.hpp"
#include "bitga/error.hpp"

namespace {

struct Options {
  std::vector<std::size_t> lengths;
  std::vector<double> pm;
  std::vector<double> pu;
  std::vector<double> pc;
  std::string crossover = "uniform";
  double pu_for_uniform = 0.33;
  std::optional<std::size_t> ops;
  std::optional<std::size_t> trials;
  std::size_t generations = 1000;
  std::size_t pop = 100;
  std::uint64_t seed = 42;
  bool quick = false;
  bool paper = false;
  bool count_rng = false;
  std::string out;
};

void addShared(CLI::App* cmd, Options& o) {
  cmd->add_option("--ops", o.ops, "Operations per timed trial");
  cmd->add_option("--trials", o.trials, "Trials per variant");
  cmd->add_option("--seed", o.seed, "Base seed (decimal 64-bit unsigned)");
  auto* quick = cmd->add_flag("--quick", o.quick, "Desk-scale profile: 30 trials x 10^4 ops (default)");
  auto* paper = cmd->add_flag("--paper", o.paper, "Full profile: 100 trials x 10^5 ops");
  quick->excludes(paper);
  cmd->add_flag("--count-rng", o.count_rng, "Report RNG calls per operation instead of timings");
  cmd->add_option("--out", o.out, "CSV destination (default: standard output)");
}

bitga::bench::Profile profileOf(const Options& o) {
  return o.paper ? bitga::bench::kFullProfile : bitga::bench::kQuickProfile;
}

bitga::CrossoverKind crossoverOf(const Options& o) {
  if (o.crossover == "onepoint") return bitga::SinglePointCrossover{};
  if (o.crossover == "twopoint") return bitga::TwoPointCrossover{};
  return bitga::UniformCrossoverParams{o.pu_for_uniform};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple vs binomial-optimized GA operator benchmarks"};
  app.require_subcommand(1);
  Options o;

  auto* mutation = app.add_subcommand("mutation", "Bit-flip mutation timing");
  mutation->add_option("--n", o.lengths, "Bit-vector lengths")->delimiter(',');
  mutation->add_option("--pm", o.pm, "Mutation rates (default 1/n, 2/n, ..., 1/4)")->delimiter(',');
  addShared(mutation, o);

  auto* crossover = app.add_subcommand("crossover", "Uniform crossover timing");
  crossover->add_option("--n", o.lengths, "Bit-vector lengths")->delimiter(',');
  crossover->add_option("--pu", o.pu, "Exchange probabilities, each <= 0.5")->delimiter(',');
  addShared(crossover, o);

  auto* ga = app.add_subcommand("ga", "Whole-GA timing and solution quality on OneMax");
  ga->add_option("--n", o.lengths, "Genome length (one value)")->delimiter(',');
  ga->add_option("--pc", o.pc, "Crossover rates")->delimiter(',');
  ga->add_option("--pm", o.pm, "Mutation rate (default 1/n)")->delimiter(',');
  ga->add_option("--crossover", o.crossover, "Crossover operator")
      ->check(CLI::IsMember({"uniform", "onepoint", "twopoint"}));
  ga->add_option("--pu-for-uniform", o.pu_for_uniform, "pu used by uniform crossover");
  ga->add_option("--generations", o.generations, "Generations per run");
  ga->add_option("--pop", o.pop, "Population size (even)");
  addShared(ga, o);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto profile = profileOf(o);
    std::vector<bitga::bench::ComparisonRow> rows;

    if (mutation->parsed()) {
      bitga::bench::MutationBenchConfig cfg;
      if (!o.lengths.empty()) cfg.lengths = o.lengths;
      cfg.rates = o.pm;
      cfg.ops_per_trial = o.ops.value_or(profile.ops_per_trial);
      cfg.trials = o.trials.value_or(profile.trials);
      cfg.seed = o.seed;
      cfg.count_rng = o.count_rng;
      rows = bitga::bench::runMutationBench(cfg);
    } else if (crossover->parsed()) {
      bitga::bench::CrossoverBenchConfig cfg;
      if (!o.lengths.empty()) cfg.lengths = o.lengths;
      if (!o.pu.empty()) cfg.pus = o.pu;
      cfg.ops_per_trial = o.ops.value_or(profile.ops_per_trial);
      cfg.trials = o.trials.value_or(profile.trials);
      cfg.seed = o.seed;
      cfg.count_rng = o.count_rng;
      rows = bitga::bench::runCrossoverBench(cfg);
    } else {
      bitga::bench::GABenchConfig cfg;
      bitga::require(o.lengths.size() <= 1, "n: the ga experiment takes a single genome length");
      bitga::require(o.pm.size() <= 1, "pm: the ga experiment takes a single mutation rate");
      if (!o.lengths.empty()) cfg.genome_bits = o.lengths.front();
      if (!o.pm.empty()) cfg.pm = o.pm.front();
      if (!o.pc.empty()) cfg.pcs = o.pc;
      cfg.crossover = crossoverOf(o);
      cfg.population_size = o.pop;
      cfg.generations = o.generations;
      cfg.trials = o.trials.value_or(profile.ga_trials);
      cfg.seed = o.seed;
      cfg.count_rng = o.count_rng;
      rows = bitga::bench::runGABench(cfg);
    }

    if (o.out.empty()) {
      bitga::bench::emitCsv(rows, std::cout);
    } else {
      bitga::bench::emitCsv(rows, std::filesystem::path(o.out));
    }
  } catch (const bitga::ContractViolation& e) {
    std::cerr << "bench: invalid argument: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
