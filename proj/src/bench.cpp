#include "bitga/bench.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bitga/stats.hpp"

namespace bitga::bench {
namespace {

using Clock = std::chrono::steady_clock;

// Folded into results so the optimizer cannot drop the timed loops.
volatile std::size_t g_sink = 0;

constexpr Variant kVariants[] = {Variant::Simple, Variant::Optimized};

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class S>
void beginMeasurement(S& src) {
  if constexpr (requires { src.resetCounts(); }) src.resetCounts();
}

template <UniformSource S>
double mutationBatch(Variant variant, std::size_t n, double pm, const BinomialSampler& sampler,
                     std::size_t ops, S& src) {
  BitVector v = randomVector(n, src);
  beginMeasurement(src);
  const auto start = Clock::now();
  if (variant == Variant::Simple) {
    for (std::size_t i = 0; i < ops; ++i) simpleMutation(v, pm, src);
  } else {
    for (std::size_t i = 0; i < ops; ++i) optimizedMutation(v, sampler, src);
  }
  const double elapsed = secondsSince(start);
  g_sink = g_sink + v.popcount();
  return elapsed;
}

template <UniformSource S>
double crossoverBatch(Variant variant, std::size_t n, double pu, const BinomialSampler& sampler,
                      std::size_t ops, S& src) {
  BitVector a = randomVector(n, src);
  BitVector b = randomVector(n, src);
  beginMeasurement(src);
  const auto start = Clock::now();
  if (variant == Variant::Simple) {
    for (std::size_t i = 0; i < ops; ++i) simpleUniformCrossover(a, b, pu, src);
  } else {
    for (std::size_t i = 0; i < ops; ++i) optimizedUniformCrossover(a, b, sampler, src);
  }
  const double elapsed = secondsSince(start);
  g_sink = g_sink + a.popcount() + b.popcount();
  return elapsed;
}

struct TrialOutcome {
  double elapsed = 0.0;
  double solution = 0.0;
};

void fillTiming(ComparisonRow& row, const std::vector<double>& simple, const std::vector<double>& optimized) {
  const auto s = stats::summarize(simple);
  const auto o = stats::summarize(optimized);
  row.mean_simple = s.mean;
  row.mean_optimized = o.mean;
  row.percent_less = s.mean > 0.0 ? 100.0 * (1.0 - o.mean / s.mean) : 0.0;
  if (s.count >= 2 && o.count >= 2) row.p_time = stats::welchTTest(s, o).p_value;
}

void fillSolutions(ComparisonRow& row, const std::vector<double>& simple, const std::vector<double>& optimized) {
  const auto s = stats::summarize(simple);
  const auto o = stats::summarize(optimized);
  row.mean_solution_simple = s.mean;
  row.mean_solution_optimized = o.mean;
  if (s.count >= 2 && o.count >= 2) row.p_solution = stats::welchTTest(s, o).p_value;
}

/// Untimed warm-up of each variant, then `trials` timed rounds alternating
/// simple and optimized. `batch(variant, src)` returns its measured outcome.
template <class BatchFn>
void timedComparison(ComparisonRow& row, std::size_t trials, std::uint64_t seed, bool with_solutions,
                     BatchFn&& batch) {
  for (Variant v : kVariants) {
    RandomSource warm(seed ^ 0x5bd1e995ULL);
    batch(v, warm);
  }
  std::vector<double> times[2];
  std::vector<double> solutions[2];
  for (std::size_t t = 0; t < trials; ++t) {
    for (Variant v : kVariants) {
      RandomSource src(trialSeed(seed, v, t));
      const TrialOutcome outcome = batch(v, src);
      times[static_cast<int>(v)].push_back(outcome.elapsed);
      solutions[static_cast<int>(v)].push_back(outcome.solution);
    }
  }
  fillTiming(row, times[0], times[1]);
  if (with_solutions) fillSolutions(row, solutions[0], solutions[1]);
}

/// Untimed counting runs; each trial owns its source so trials run in
/// parallel and merge in trial order. `batch(variant, src)` returns the
/// solution (ignored unless with_solutions) and `per` normalizes the counts.
template <class BatchFn>
void countedComparison(ComparisonRow& row, std::size_t trials, std::uint64_t seed, double per,
                       bool with_solutions, BatchFn&& batch) {
  std::vector<double> solutions[2];
  for (Variant v : kVariants) {
    std::vector<RngCounts> counts(trials);
    std::vector<double>& sol = solutions[static_cast<int>(v)];
    sol.assign(trials, 0.0);
    const auto trial_count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < trial_count; ++t) {
      CountingRandomSource<> src(trialSeed(seed, v, static_cast<std::size_t>(t)));
      sol[t] = batch(v, src);
      counts[t] = {static_cast<double>(src.realCount()), static_cast<double>(src.intCount()),
                   static_cast<double>(src.blockCount())};
    }
    RngCounts total;
    for (const RngCounts& c : counts) {
      total.real += c.real;
      total.integer += c.integer;
      total.block += c.block;
    }
    const double denom = per * static_cast<double>(trials);
    const RngCounts mean{total.real / denom, total.integer / denom, total.block / denom};
    (v == Variant::Simple ? row.counts_simple : row.counts_optimized) = mean;
  }
  if (with_solutions) fillSolutions(row, solutions[0], solutions[1]);
}

ComparisonRow makeRow(std::string experiment, std::size_t n, std::string param_name, double param_value) {
  ComparisonRow row;
  row.experiment = std::move(experiment);
  row.n = n;
  row.param_name = std::move(param_name);
  row.param_value = param_value;
  return row;
}

void checkCommon(std::size_t ops, std::size_t trials) {
  require(ops >= 1, "ops: operations per trial must be at least 1");
  require(trials >= 1, "trials: must be at least 1");
}

void checkLengths(const std::vector<std::size_t>& lengths, std::size_t minimum) {
  require(!lengths.empty(), "n: at least one bit-vector length is required");
  for (std::size_t n : lengths) {
    require(n >= minimum, minimum > 1 ? "n: bit-vector length must be at least 2"
                                      : "n: bit-vector length must be at least 1");
  }
}

// ---- CSV ----------------------------------------------------------------

std::string formatSeconds(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", *v);
  return buf;
}

std::string formatPercent(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", *v);
  return buf;
}

std::string formatP(const std::optional<double>& v) {
  if (!v) return "NA";
  if (*v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", *v);
  return buf;
}

std::string formatGeneral(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string formatSolution(const std::optional<double>& v) {
  if (!v) return "NA";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", *v);
  return buf;
}

std::optional<double> parseOptional(const std::string& field) {
  if (field == "NA") return std::nullopt;
  return std::stod(field);
}

std::vector<std::string> splitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::uint64_t trialSeed(std::uint64_t base_seed, Variant variant, std::size_t trial) {
  const std::uint64_t offset = variant == Variant::Optimized ? kOptimizedSeedOffset : 0;
  return base_seed + offset + trial;
}

std::vector<double> defaultMutationRates(std::size_t n) {
  require(n >= 1, "n: bit-vector length must be at least 1");
  std::vector<double> rates;
  for (std::size_t flips = 1; 4 * flips <= n; flips *= 2) {
    rates.push_back(static_cast<double>(flips) / static_cast<double>(n));
  }
  if (rates.empty()) rates.push_back(1.0 / static_cast<double>(n));
  return rates;
}

std::vector<ComparisonRow> runMutationBench(const MutationBenchConfig& config) {
  checkLengths(config.lengths, 1);
  checkCommon(config.ops_per_trial, config.trials);
  for (double pm : config.rates) checkProbability(pm, "pm: mutation rate must lie in [0, 1]");

  std::vector<ComparisonRow> rows;
  for (std::size_t n : config.lengths) {
    for (double pm : config.rates.empty() ? defaultMutationRates(n) : config.rates) {
      rows.push_back(makeRow("mutation", n, "pm", pm));
    }
  }

  for (ComparisonRow& row : rows) {
    const std::size_t n = row.n;
    const double pm = row.param_value;
    const BinomialSampler sampler(static_cast<std::int64_t>(n), pm);
    const std::size_t ops = config.ops_per_trial;
    if (config.count_rng) {
      countedComparison(row, config.trials, config.seed, static_cast<double>(ops), false,
                        [&](Variant v, CountingRandomSource<>& src) {
                          mutationBatch(v, n, pm, sampler, ops, src);
                          return 0.0;
                        });
    } else {
      timedComparison(row, config.trials, config.seed, false, [&](Variant v, RandomSource& src) {
        return TrialOutcome{mutationBatch(v, n, pm, sampler, ops, src), 0.0};
      });
    }
  }
  return rows;
}

std::vector<ComparisonRow> runCrossoverBench(const CrossoverBenchConfig& config) {
  checkLengths(config.lengths, 1);
  checkCommon(config.ops_per_trial, config.trials);
  require(!config.pus.empty(), "pu: at least one exchange probability is required");
  for (double pu : config.pus) {
    require(pu >= 0.0, "pu: exchange probability must be non-negative");
    require(pu <= 0.5,
            "pu: values above 0.5 are not swept; exchanging a fraction pu of the bits yields the same "
            "children as exchanging the complementary 1 - pu");
  }

  std::vector<ComparisonRow> rows;
  for (std::size_t n : config.lengths) {
    for (double pu : config.pus) {
      rows.push_back(makeRow("crossover", n, "pu", pu));
    }
  }

  for (ComparisonRow& row : rows) {
    const std::size_t n = row.n;
    const double pu = row.param_value;
    const BinomialSampler sampler(static_cast<std::int64_t>(n), pu);
    const std::size_t ops = config.ops_per_trial;
    if (config.count_rng) {
      countedComparison(row, config.trials, config.seed, static_cast<double>(ops), false,
                        [&](Variant v, CountingRandomSource<>& src) {
                          crossoverBatch(v, n, pu, sampler, ops, src);
                          return 0.0;
                        });
    } else {
      timedComparison(row, config.trials, config.seed, false, [&](Variant v, RandomSource& src) {
        return TrialOutcome{crossoverBatch(v, n, pu, sampler, ops, src), 0.0};
      });
    }
  }
  return rows;
}

std::vector<ComparisonRow> runGABench(const GABenchConfig& config) {
  require(config.trials >= 1, "trials: must be at least 1");
  require(!config.pcs.empty(), "pc: at least one crossover rate is required");

  GAConfig base;
  base.genome_bits = config.genome_bits;
  base.population_size = config.population_size;
  base.mutation.pm = config.pm.value_or(1.0 / static_cast<double>(config.genome_bits));
  base.crossover = config.crossover;
  base.generations = config.generations;
  for (double pc : config.pcs) {
    base.pc = pc;
    validate(base);
  }

  std::vector<ComparisonRow> rows;
  for (double pc : config.pcs) {
    ComparisonRow row = makeRow("ga:" + toString(config.crossover), config.genome_bits, "pc", pc);
    GAConfig run = base;
    run.pc = pc;
    if (config.count_rng) {
      countedComparison(row, config.trials, config.seed, 1.0, true, [&](Variant v, CountingRandomSource<>& src) {
        return static_cast<double>(runGA(run, v, src).best_fitness);
      });
    } else {
      timedComparison(row, config.trials, config.seed, true, [&](Variant v, RandomSource& src) {
        const auto start = Clock::now();
        const RunResult result = runGA(run, v, src);
        return TrialOutcome{secondsSince(start), static_cast<double>(result.best_fitness)};
      });
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> solutionQualityTrials(const GAConfig& config, Variant variant, std::size_t trials,
                                          std::uint64_t base_seed) {
  validate(config);
  std::vector<double> best(trials, 0.0);
  const auto trial_count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < trial_count; ++t) {
    RandomSource src(trialSeed(base_seed, variant, static_cast<std::size_t>(t)));
    best[t] = static_cast<double>(runGA(config, variant, src).best_fitness);
  }
  return best;
}

std::vector<std::string> csvHeader(bool with_counts) {
  std::vector<std::string> header{"experiment",
                                  "variants",
                                  "n",
                                  "param",
                                  "mean_simple_s",
                                  "mean_optimized_s",
                                  "percent_less",
                                  "p_time",
                                  "mean_solution_simple",
                                  "mean_solution_optimized",
                                  "p_solution"};
  if (with_counts) {
    for (const char* col : {"real_simple", "int_simple", "block_simple", "real_optimized", "int_optimized",
                            "block_optimized"}) {
      header.emplace_back(col);
    }
  }
  return header;
}

void emitCsv(const std::vector<ComparisonRow>& rows, std::ostream& out) {
  const bool with_counts = !rows.empty() && rows.front().counts_simple.has_value();
  const auto header = csvHeader(with_counts);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const ComparisonRow& row : rows) {
    out << row.experiment << ",simple|optimized," << row.n << ',' << row.param_name << '='
        << formatGeneral(row.param_value) << ',' << formatSeconds(row.mean_simple) << ','
        << formatSeconds(row.mean_optimized) << ',' << formatPercent(row.percent_less) << ','
        << formatP(row.p_time) << ',' << formatSolution(row.mean_solution_simple) << ','
        << formatSolution(row.mean_solution_optimized) << ',' << formatP(row.p_solution);
    if (with_counts) {
      const RngCounts s = row.counts_simple.value_or(RngCounts{});
      const RngCounts o = row.counts_optimized.value_or(RngCounts{});
      for (double v : {s.real, s.integer, s.block, o.real, o.integer, o.block}) out << ',' << formatGeneral(v);
    }
    out << '\n';
  }
}

void emitCsv(const std::vector<ComparisonRow>& rows, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  emitCsv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<ComparisonRow> parseCsv(std::istream& in) {
  std::vector<ComparisonRow> rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  const std::size_t columns = splitCsvLine(line).size();
  const bool with_counts = columns == csvHeader(true).size();
  require(with_counts || columns == csvHeader(false).size(), "parseCsv: unrecognized header");

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = splitCsvLine(line);
    require(f.size() == columns, "parseCsv: row has the wrong number of fields");
    ComparisonRow row;
    row.experiment = f[0];
    row.n = static_cast<std::size_t>(std::stoull(f[2]));
    const auto eq = f[3].find('=');
    require(eq != std::string::npos, "parseCsv: param must look like name=value");
    row.param_name = f[3].substr(0, eq);
    row.param_value = std::stod(f[3].substr(eq + 1));
    row.mean_simple = parseOptional(f[4]);
    row.mean_optimized = parseOptional(f[5]);
    row.percent_less = parseOptional(f[6]);
    row.p_time = parseOptional(f[7]);
    row.mean_solution_simple = parseOptional(f[8]);
    row.mean_solution_optimized = parseOptional(f[9]);
    row.p_solution = parseOptional(f[10]);
    if (with_counts) {
      row.counts_simple = RngCounts{std::stod(f[11]), std::stod(f[12]), std::stod(f[13])};
      row.counts_optimized = RngCounts{std::stod(f[14]), std::stod(f[15]), std::stod(f[16])};
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bitga::bench
