#include "bitga/binomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "test_support.hpp"

namespace bitga {
namespace {

std::vector<double> histogram(const BinomialSampler& sampler, RandomSource& src, int draws) {
  std::vector<double> counts(static_cast<std::size_t>(sampler.n()) + 1, 0.0);
  for (int i = 0; i < draws; ++i) {
    const std::int64_t k = sampler(src);
    EXPECT_GE(k, 0);
    EXPECT_LE(k, sampler.n());
    counts[static_cast<std::size_t>(k)] += 1.0;
  }
  return counts;
}

TEST(Binomial, ZeroProbabilityAlwaysGivesZero) {
  RandomSource src(1);
  const BinomialSampler sampler(123, 0.0);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sampler(src), 0);
}

TEST(Binomial, UnitProbabilityAlwaysGivesN) {
  RandomSource src(1);
  const BinomialSampler sampler(17, 1.0);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sampler(src), 17);
}

TEST(Binomial, ZeroTrialsAlwaysGivesZero) {
  RandomSource src(1);
  const auto sampler = makeBinomialSampler(0, 0.5);
  EXPECT_EQ(sampler.regime(), BinomialRegime::Constant);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sampler(src), 0);
}

TEST(Binomial, RegimeFollowsTheMeanThreshold) {
  EXPECT_EQ(makeBinomialSampler(1024, 1.0 / 1024).regime(), BinomialRegime::Inversion);
  EXPECT_EQ(makeBinomialSampler(1024, 0.25).regime(), BinomialRegime::Btpe);
  EXPECT_EQ(makeBinomialSampler(40, 0.25).regime(), BinomialRegime::Btpe);  // n*p == 10
  EXPECT_EQ(makeBinomialSampler(39, 0.25).regime(), BinomialRegime::Inversion);
  EXPECT_EQ(makeBinomialSampler(40, 0.75).regime(), BinomialRegime::Btpe);
  EXPECT_EQ(makeBinomialSampler(30, 0.9).regime(), BinomialRegime::Inversion);
}

TEST(Binomial, RejectsInvalidParameters) {
  EXPECT_THROW(makeBinomialSampler(-1, 0.5), ContractViolation);
  EXPECT_THROW(makeBinomialSampler(10, -0.01), ContractViolation);
  EXPECT_THROW(makeBinomialSampler(10, 1.01), ContractViolation);
  EXPECT_THROW(makeBinomialSampler(10, std::numeric_limits<double>::quiet_NaN()), ContractViolation);
}

struct PmfCase {
  std::int64_t n;
  double p;
};

class BinomialPmf : public ::testing::TestWithParam<PmfCase> {};

TEST_P(BinomialPmf, EmpiricalPmfMatchesExactPmf) {
  const auto [n, p] = GetParam();
  RandomSource src(static_cast<std::uint64_t>(n * 1000) + static_cast<std::uint64_t>(p * 1e6));
  const BinomialSampler sampler(n, p);
  const auto counts = histogram(sampler, src, 1'000'000);
  const auto pmf = testing::binomialPmf(static_cast<std::size_t>(n), p);
  EXPECT_GT(testing::histogramPValue(counts, pmf), testing::kSignificance)
      << "n=" << n << " p=" << p << " regime=" << toString(sampler.regime());
}

INSTANTIATE_TEST_SUITE_P(BothRegimes, BinomialPmf,
                         ::testing::Values(PmfCase{20, 0.25}, PmfCase{1024, 1.0 / 1024}, PmfCase{30, 0.9},
                                           PmfCase{40, 0.25}, PmfCase{21, 0.5}, PmfCase{1000, 0.011},
                                           PmfCase{50, 0.49}, PmfCase{1024, 0.25}, PmfCase{1000, 0.7},
                                           PmfCase{100, 0.5}, PmfCase{65536, 0.3}));

TEST(Binomial, SampleMeansAreWithinFourSigma) {
  constexpr int kDraws = 1'000'000;
  for (const PmfCase c : {PmfCase{16, 1.0 / 16}, PmfCase{1024, 1.0 / 1024}, PmfCase{1024, 0.25},
                          PmfCase{50, 0.49}}) {
    RandomSource src(4242);
    const BinomialSampler sampler(c.n, c.p);
    double sum = 0.0;
    for (int i = 0; i < kDraws; ++i) sum += static_cast<double>(sampler(src));
    const double mean = static_cast<double>(c.n) * c.p;
    const double sigma = std::sqrt(static_cast<double>(c.n) * c.p * (1.0 - c.p) / kDraws);
    EXPECT_NEAR(sum / kDraws, mean, 4.0 * sigma) << "n=" << c.n << " p=" << c.p;
  }
}

TEST(Binomial, ComplementaryProbabilityMirrorsTheDistribution) {
  constexpr int kDraws = 200'000;
  for (const PmfCase c : {PmfCase{12, 0.3}, PmfCase{40, 0.3}}) {
    RandomSource src_a(1), src_b(2);
    const BinomialSampler direct(c.n, c.p);
    const BinomialSampler mirror(c.n, 1.0 - c.p);
    std::vector<double> a(static_cast<std::size_t>(c.n) + 1, 0.0);
    std::vector<double> b(a.size(), 0.0);
    for (int i = 0; i < kDraws; ++i) {
      a[static_cast<std::size_t>(direct(src_a))] += 1.0;
      b[static_cast<std::size_t>(c.n - mirror(src_b))] += 1.0;
    }
    EXPECT_GT(testing::homogeneityPValue(a, b), testing::kSignificance) << "n=" << c.n;
  }
}

double meanDrawsPerVariate(std::int64_t n, double p, int variates) {
  CountingRandomSource<> src(9);
  const BinomialSampler sampler(n, p);
  for (int i = 0; i < variates; ++i) sampler(src);
  return static_cast<double>(src.totalCount()) / variates;
}

TEST(Binomial, BtpeCostIsConstantInN) {
  const double small = meanDrawsPerVariate(1 << 10, 0.3, 1'000'000);
  const double large = meanDrawsPerVariate(1 << 16, 0.3, 1'000'000);
  EXPECT_LE(small, 8.0);
  EXPECT_LE(large, 8.0);
  EXPECT_LT(std::abs(small - large) / small, 0.10) << small << " vs " << large;
}

TEST(Binomial, InversionUsesOneUniformPerVariate) {
  EXPECT_NEAR(meanDrawsPerVariate(1024, 1.0 / 1024, 100'000), 1.0, 1e-3);
}

}  // namespace
}  // namespace bitga
