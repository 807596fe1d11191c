#pragma once

/// @file stats.hpp
/// Descriptive statistics, Welch's unequal-variances t-test and the chi-square
/// goodness-of-fit test, with the incomplete beta and gamma functions they need.

#include <cstddef>
#include <cstdint>
#include <span>

namespace bitga::stats {

struct SampleSummary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single value
};

struct TTestResult {
  double t_statistic = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;  // two-tailed
};

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1.0;
};

/// p-values below this are reported as exactly 0.
inline constexpr double kPValueFloor = 1e-300;

/// Throws ContractViolation on empty input.
SampleSummary summarize(std::span<const double> values);

/// Welford accumulator so callers can summarize without keeping every value.
class RunningSummary {
 public:
  void add(double x);
  std::size_t count() const { return count_; }
  SampleSummary summary() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Requires both counts >= 2. If both variances are zero, p is 1 for equal
/// means and 0 otherwise.
TTestResult welchTTest(const SampleSummary& a, const SampleSummary& b);

/// df = bins - 1. Every expected count must be at least 5; merge sparse bins first.
ChiSquareResult chiSquareGoodnessOfFit(std::span<const double> observed, std::span<const double> expected);

/// Two-sample homogeneity test on two histograms over the same bins,
/// df = bins - 1. Each bin's pooled expected count must be at least 5.
ChiSquareResult chiSquareHomogeneity(std::span<const double> first, std::span<const double> second);

/// I_x(a, b).
double regularizedIncompleteBeta(double a, double b, double x);
/// Q(a, x) = Gamma(a, x) / Gamma(a).
double regularizedUpperGamma(double a, double x);
/// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double studentTwoTailedP(double t, double df);
/// P(X >= x) for chi-square with `df` degrees of freedom.
double chiSquareSurvival(double x, double df);

}  // namespace bitga::stats
