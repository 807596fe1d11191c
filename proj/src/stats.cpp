#include "bitga/stats.hpp"

#include <cmath>
#include <limits>

#include "bitga/error.hpp"

namespace bitga::stats {
namespace {

constexpr double kTolerance = 1e-10;
constexpr int kMaxIterations = 10000;
constexpr double kTiny = 1e-300;

double floorP(double p) {
  if (p < kPValueFloor) return 0.0;
  return p > 1.0 ? 1.0 : p;
}

// Modified Lentz evaluation of the incomplete beta continued fraction.
double betaContinuedFraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kTolerance) break;
  }
  return h;
}

// Series for the lower regularized gamma P(a, x); converges for x < a + 1.
double lowerGammaSeries(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kTolerance) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a, x); converges for x >= a + 1.
double upperGammaContinuedFraction(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kTolerance) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

SampleSummary summarize(std::span<const double> values) {
  require(!values.empty(), "summarize: need at least one value");
  RunningSummary running;
  for (double v : values) running.add(v);
  return running.summary();
}

void RunningSummary::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

SampleSummary RunningSummary::summary() const {
  require(count_ > 0, "RunningSummary: no values added");
  const double variance = count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  return {count_, mean_, variance > 0.0 ? variance : 0.0};
}

double regularizedIncompleteBeta(double a, double b, double x) {
  require(a > 0.0 && b > 0.0, "incomplete beta: shape parameters must be positive");
  require(x >= 0.0 && x <= 1.0, "incomplete beta: x must lie in [0, 1]");
  if (x == 0.0 || x == 1.0) return x;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betaContinuedFraction(a, b, x) / a;
  return 1.0 - front * betaContinuedFraction(b, a, 1.0 - x) / b;
}

double regularizedUpperGamma(double a, double x) {
  require(a > 0.0, "incomplete gamma: shape must be positive");
  require(x >= 0.0, "incomplete gamma: x must be non-negative");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - lowerGammaSeries(a, x);
  return upperGammaContinuedFraction(a, x);
}

double studentTwoTailedP(double t, double df) {
  require(df > 0.0, "student t: degrees of freedom must be positive");
  if (std::isinf(t)) return 0.0;
  const double x = df / (df + t * t);
  return floorP(regularizedIncompleteBeta(df / 2.0, 0.5, x));
}

double chiSquareSurvival(double x, double df) {
  require(df > 0.0, "chi-square: degrees of freedom must be positive");
  return floorP(regularizedUpperGamma(df / 2.0, x / 2.0));
}

TTestResult welchTTest(const SampleSummary& a, const SampleSummary& b) {
  require(a.count >= 2 && b.count >= 2, "welchTTest: each sample needs at least 2 values");
  require(a.variance >= 0.0 && b.variance >= 0.0, "welchTTest: variances must be non-negative");

  const double na = static_cast<double>(a.count);
  const double nb = static_cast<double>(b.count);
  const double sa = a.variance / na;
  const double sb = b.variance / nb;
  const double diff = a.mean - b.mean;

  TTestResult result;
  if (sa + sb == 0.0) {
    result.degrees_of_freedom = na + nb - 2.0;
    if (diff == 0.0) {
      result.t_statistic = 0.0;
      result.p_value = 1.0;
    } else {
      result.t_statistic = diff > 0 ? std::numeric_limits<double>::infinity()
                                    : -std::numeric_limits<double>::infinity();
      result.p_value = 0.0;
    }
    return result;
  }

  result.t_statistic = diff / std::sqrt(sa + sb);
  result.degrees_of_freedom = (sa + sb) * (sa + sb) / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
  result.p_value = studentTwoTailedP(result.t_statistic, result.degrees_of_freedom);
  return result;
}

ChiSquareResult chiSquareGoodnessOfFit(std::span<const double> observed, std::span<const double> expected) {
  require(observed.size() == expected.size(), "chiSquare: observed and expected differ in length");
  require(observed.size() >= 2, "chiSquare: need at least 2 bins");
  double statistic = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    require(expected[i] >= 5.0, "chiSquare: every expected count must be at least 5");
    require(observed[i] >= 0.0, "chiSquare: observed counts must be non-negative");
    const double d = observed[i] - expected[i];
    statistic += d * d / expected[i];
  }
  const std::size_t df = observed.size() - 1;
  return {statistic, df, chiSquareSurvival(statistic, static_cast<double>(df))};
}

ChiSquareResult chiSquareHomogeneity(std::span<const double> first, std::span<const double> second) {
  require(first.size() == second.size(), "chiSquareHomogeneity: histograms differ in length");
  require(first.size() >= 2, "chiSquareHomogeneity: need at least 2 bins");
  double total_first = 0.0;
  double total_second = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    total_first += first[i];
    total_second += second[i];
  }
  require(total_first > 0.0 && total_second > 0.0, "chiSquareHomogeneity: empty histogram");
  const double total = total_first + total_second;

  double statistic = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const double pooled = first[i] + second[i];
    const double e1 = pooled * total_first / total;
    const double e2 = pooled * total_second / total;
    require(e1 >= 5.0 && e2 >= 5.0, "chiSquareHomogeneity: every expected count must be at least 5");
    statistic += (first[i] - e1) * (first[i] - e1) / e1 + (second[i] - e2) * (second[i] - e2) / e2;
  }
  const std::size_t df = first.size() - 1;
  return {statistic, df, chiSquareSurvival(statistic, static_cast<double>(df))};
}

}  // namespace bitga::stats
