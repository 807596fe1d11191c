#pragma once

// Independent oracles for the distributional tests: exact binomial PMFs by
// direct evaluation, bin merging, and subset encoding.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "bitga/stats.hpp"

namespace bitga::testing {

inline constexpr double kSignificance = 0.001;

/// C(n, k) p^k (1-p)^(n-k) for every k, evaluated directly in long double
/// log space so large n neither overflows nor underflows.
inline std::vector<double> binomialPmf(std::size_t n, double p) {
  std::vector<double> pmf(n + 1);
  const long double nn = static_cast<long double>(n);
  const long double log_p = std::log(static_cast<long double>(p));
  const long double log_q = std::log1p(-static_cast<long double>(p));
  for (std::size_t k = 0; k <= n; ++k) {
    const long double kk = static_cast<long double>(k);
    const long double log_choose = std::lgamma(nn + 1.0L) - std::lgamma(kk + 1.0L) - std::lgamma(nn - kk + 1.0L);
    pmf[k] = static_cast<double>(std::exp(log_choose + kk * log_p + (nn - kk) * log_q));
  }
  return pmf;
}

struct Bins {
  std::vector<double> observed;
  std::vector<double> expected;
};

/// Merges adjacent bins left to right until every expected count reaches
/// `min_expected`; a short remainder is folded into the last bin.
inline Bins mergeSparseBins(const std::vector<double>& observed, const std::vector<double>& expected,
                            double min_expected = 5.0) {
  Bins out;
  double obs = 0.0;
  double exp = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    obs += observed[i];
    exp += expected[i];
    if (exp >= min_expected) {
      out.observed.push_back(obs);
      out.expected.push_back(exp);
      obs = exp = 0.0;
    }
  }
  if (exp > 0.0 || obs > 0.0) {
    if (out.expected.empty()) {
      out.observed.push_back(obs);
      out.expected.push_back(exp);
    } else {
      out.observed.back() += obs;
      out.expected.back() += exp;
    }
  }
  return out;
}

/// Chi-square p-value of a histogram of draws against a probability vector.
inline double histogramPValue(const std::vector<double>& counts, const std::vector<double>& probabilities) {
  double total = 0.0;
  for (double c : counts) total += c;
  std::vector<double> expected(probabilities.size());
  for (std::size_t i = 0; i < probabilities.size(); ++i) expected[i] = probabilities[i] * total;
  const Bins bins = mergeSparseBins(counts, expected);
  return stats::chiSquareGoodnessOfFit(bins.observed, bins.expected).p_value;
}

/// Two-histogram homogeneity p-value with sparse bins merged on pooled counts.
inline double homogeneityPValue(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> ma;
  std::vector<double> mb;
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa >= 20.0 && sb >= 20.0) {
      ma.push_back(sa);
      mb.push_back(sb);
      sa = sb = 0.0;
    }
  }
  if (!ma.empty()) {
    ma.back() += sa;
    mb.back() += sb;
  }
  return stats::chiSquareHomogeneity(ma, mb).p_value;
}

/// Bitmask of a sample's members, for counting subsets.
template <class Sample>
std::uint64_t subsetKey(const Sample& s) {
  std::uint64_t key = 0;
  for (auto v : s) key |= std::uint64_t{1} << v;
  return key;
}

inline std::vector<double> values(const std::map<std::uint64_t, double>& counts) {
  std::vector<double> out;
  for (const auto& [key, count] : counts) out.push_back(count);
  return out;
}

inline double binomialCoefficient(std::size_t n, std::size_t k) {
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

}  // namespace bitga::testing
