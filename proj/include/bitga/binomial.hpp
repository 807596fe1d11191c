#pragma once

/// @file binomial.hpp
/// Binomial random variates B(n, p) at constant expected cost per draw.
///
/// Small means (n * min(p, 1-p) < 10) use sequential inversion of the CDF from
/// k = 0, which costs one uniform per draw. Everything else goes through BTPE
/// (Kachitvichyanukul & Schmeiser, CACM 31(2), 1988): a four-region hull made of
/// a triangle, two parallelograms and two exponential tails, with a squeeze on
/// log f(x) before the Stirling-series acceptance test.

#include <cmath>
#include <cstdint>

#include "bitga/rng.hpp"

namespace bitga {

enum class BinomialRegime {
  Constant,   // n == 0, p == 0 or p == 1
  Inversion,
  Btpe,
};

const char* toString(BinomialRegime regime);

class BinomialSampler {
 public:
  static constexpr double kBtpeThreshold = 10.0;

  /// Throws ContractViolation unless n >= 0 and p is in [0, 1].
  BinomialSampler(std::int64_t n, double p);

  std::int64_t n() const { return n_; }
  double p() const { return p_; }
  BinomialRegime regime() const { return regime_; }

  template <UniformSource S>
  std::int64_t operator()(S& src) const {
    switch (regime_) {
      case BinomialRegime::Constant:
        return constant_;
      case BinomialRegime::Inversion:
        return orient(inversion(src));
      case BinomialRegime::Btpe:
        return orient(btpe(src));
    }
    return constant_;
  }

 private:
  // Both regimes sample with success probability min(p, 1 - p).
  std::int64_t orient(std::int64_t k) const { return mirrored_ ? n_ - k : k; }

  template <UniformSource S>
  std::int64_t inversion(S& src) const;

  template <UniformSource S>
  std::int64_t btpe(S& src) const;

  std::int64_t n_;
  double p_;
  BinomialRegime regime_;
  bool mirrored_ = false;
  std::int64_t constant_ = 0;

  double r_ = 0.0;  // min(p, 1 - p)
  double q_ = 1.0;
  double ratio_ = 0.0;  // r / q
  double g_ = 0.0;      // (n + 1) * r / q

  // Inversion.
  double q_pow_n_ = 1.0;

  // BTPE set-up.
  std::int64_t mode_ = 0;
  double fmode_ = 0.0;
  double npq_ = 0.0;
  double p1_ = 0.0;
  double xm_ = 0.0;
  double xl_ = 0.0;
  double xr_ = 0.0;
  double c_ = 0.0;
  double lambda_l_ = 0.0;
  double lambda_r_ = 0.0;
  double p2_ = 0.0;
  double p3_ = 0.0;
  double p4_ = 0.0;
};

BinomialSampler makeBinomialSampler(std::int64_t n, double p);

template <UniformSource S>
std::int64_t sampleBinomial(const BinomialSampler& sampler, S& src) {
  return sampler(src);
}

template <UniformSource S>
std::int64_t BinomialSampler::inversion(S& src) const {
  for (;;) {
    double u = src.nextReal();
    double f = q_pow_n_;
    std::int64_t k = 0;
    while (u > f) {
      u -= f;
      ++k;
      if (k > n_) break;  // rounding left u above the total mass; redraw
      f *= g_ / static_cast<double>(k) - ratio_;
    }
    if (k <= n_) return k;
  }
}

namespace detail {

inline double stirlingTail(double x) {
  const double x2 = x * x;
  return (13860.0 - (462.0 - (132.0 - (99.0 - 140.0 / x2) / x2) / x2) / x2) / x / 166320.0;
}

}  // namespace detail

template <UniformSource S>
std::int64_t BinomialSampler::btpe(S& src) const {
  const double n = static_cast<double>(n_);
  for (;;) {
    const double u = src.nextReal() * p4_;
    double v = src.nextReal();
    std::int64_t ix;

    if (u <= p1_) {
      // Triangle: accepted without evaluating f.
      return static_cast<std::int64_t>(std::floor(xm_ - p1_ * v + u));
    }
    if (u <= p2_) {
      // Parallelograms.
      const double x = xl_ + (u - p1_) / c_;
      v = v * c_ + 1.0 - std::abs(xm_ - x) / p1_;
      if (v > 1.0 || v <= 0.0) continue;
      ix = static_cast<std::int64_t>(std::floor(x));
    } else if (u <= p3_) {
      // Left exponential tail.
      if (v <= 0.0) continue;
      const double x = std::floor(xl_ + std::log(v) / lambda_l_);
      if (x < 0.0) continue;
      ix = static_cast<std::int64_t>(x);
      v *= (u - p2_) * lambda_l_;
    } else {
      // Right exponential tail.
      if (v <= 0.0) continue;
      const double x = std::floor(xr_ - std::log(v) / lambda_r_);
      if (x > n) continue;
      ix = static_cast<std::int64_t>(x);
      v *= (u - p3_) * lambda_r_;
    }

    const std::int64_t k = ix > mode_ ? ix - mode_ : mode_ - ix;
    if (k <= 20 || static_cast<double>(k) >= npq_ / 2.0 - 1.0) {
      // f(ix) / f(mode) by the recurrence f(i) / f(i-1) = g / i - r.
      double f = 1.0;
      if (mode_ < ix) {
        for (std::int64_t i = mode_ + 1; i <= ix; ++i) f *= g_ / static_cast<double>(i) - ratio_;
      } else if (mode_ > ix) {
        for (std::int64_t i = ix + 1; i <= mode_; ++i) f /= g_ / static_cast<double>(i) - ratio_;
      }
      if (v <= f) return ix;
      continue;
    }

    // Squeeze with bounds on log f, then the exact test via Stirling.
    const double kd = static_cast<double>(k);
    const double amaxp = kd / npq_ * ((kd * (kd / 3.0 + 0.625) + 0.1666666666666) / npq_ + 0.5);
    const double ynorm = -(kd * kd / (2.0 * npq_));
    const double alv = std::log(v);
    if (alv < ynorm - amaxp) return ix;
    if (alv > ynorm + amaxp) continue;

    const double x = static_cast<double>(ix);
    const double x1 = x + 1.0;
    const double f1 = fmode_ + 1.0;
    const double z = n + 1.0 - fmode_;
    const double w = n - x + 1.0;
    const double bound = xm_ * std::log(f1 / x1) + (n - fmode_ + 0.5) * std::log(z / w) +
                         (x - fmode_) * std::log(w * r_ / (x1 * q_)) + detail::stirlingTail(f1) +
                         detail::stirlingTail(z) + detail::stirlingTail(x1) + detail::stirlingTail(w);
    if (alv <= bound) return ix;
  }
}

}  // namespace bitga
