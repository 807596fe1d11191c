#include "bitga/binomial.hpp"

#include <algorithm>
#include <cmath>

namespace bitga {

const char* toString(BinomialRegime regime) {
  switch (regime) {
    case BinomialRegime::Constant:
      return "constant";
    case BinomialRegime::Inversion:
      return "inversion";
    case BinomialRegime::Btpe:
      return "btpe";
  }
  return "unknown";
}

BinomialSampler::BinomialSampler(std::int64_t n, double p) : n_(n), p_(p) {
  require(n >= 0, "binomial: trial count must be non-negative");
  require(p >= 0.0 && p <= 1.0, "binomial: probability must lie in [0, 1]");

  if (n == 0 || p == 0.0 || p == 1.0) {
    regime_ = BinomialRegime::Constant;
    constant_ = p == 1.0 ? n : 0;
    return;
  }

  mirrored_ = p > 0.5;
  r_ = std::min(p, 1.0 - p);
  q_ = 1.0 - r_;
  ratio_ = r_ / q_;
  g_ = ratio_ * (static_cast<double>(n) + 1.0);

  const double np = static_cast<double>(n) * r_;
  if (np < kBtpeThreshold) {
    regime_ = BinomialRegime::Inversion;
    q_pow_n_ = std::pow(q_, static_cast<double>(n));
    return;
  }

  regime_ = BinomialRegime::Btpe;
  const double ffm = np + r_;
  mode_ = static_cast<std::int64_t>(ffm);
  fmode_ = static_cast<double>(mode_);
  npq_ = np * q_;
  p1_ = std::floor(2.195 * std::sqrt(npq_) - 4.6 * q_) + 0.5;
  xm_ = fmode_ + 0.5;
  xl_ = xm_ - p1_;
  xr_ = xm_ + p1_;
  c_ = 0.134 + 20.5 / (15.3 + fmode_);
  double a = (ffm - xl_) / (ffm - xl_ * r_);
  lambda_l_ = a * (1.0 + 0.5 * a);
  a = (xr_ - ffm) / (xr_ * q_);
  lambda_r_ = a * (1.0 + 0.5 * a);
  p2_ = p1_ * (1.0 + c_ + c_);
  p3_ = p2_ + c_ / lambda_l_;
  p4_ = p3_ + c_ / lambda_r_;
}

BinomialSampler makeBinomialSampler(std::int64_t n, double p) { return BinomialSampler(n, p); }

}  // namespace bitga
