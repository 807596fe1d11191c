#include "bitga/stats.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "bitga/error.hpp"
#include "bitga/rng.hpp"

namespace bitga::stats {
namespace {

// Reference values were computed once with an independent statistics package
// and frozen here.

SampleSummary make(std::size_t count, double mean, double variance) { return {count, mean, variance}; }

TEST(Summarize, Examples) {
  const std::vector<double> one{5.0};
  const auto s1 = summarize(one);
  EXPECT_EQ(s1.count, 1u);
  EXPECT_EQ(s1.mean, 5.0);
  EXPECT_EQ(s1.variance, 0.0);

  const std::vector<double> three{1, 2, 3};
  const auto s3 = summarize(three);
  EXPECT_EQ(s3.count, 3u);
  EXPECT_DOUBLE_EQ(s3.mean, 2.0);
  EXPECT_DOUBLE_EQ(s3.variance, 1.0);

  const std::vector<double> same{0.1, 0.1, 0.1};
  EXPECT_EQ(summarize(same).variance, 0.0);
}

TEST(Summarize, EmptyIsAContractViolation) {
  EXPECT_THROW(summarize(std::vector<double>{}), ContractViolation);
}

TEST(RunningSummary, MatchesTwoPassSummary) {
  RandomSource src(1);
  std::vector<double> xs;
  RunningSummary running;
  for (int i = 0; i < 1000; ++i) {
    xs.push_back(1e6 + src.nextReal());
    running.add(xs.back());
  }
  const auto a = summarize(xs);
  const auto b = running.summary();
  EXPECT_EQ(a.count, b.count);
  EXPECT_NEAR(a.mean, b.mean, 1e-9);
  EXPECT_NEAR(a.variance, b.variance, 1e-9);
}

TEST(WelchTTest, HandExample) {
  const auto r = welchTTest(make(3, 1, 1), make(3, 2, 1));
  EXPECT_NEAR(r.t_statistic, -1.224744871391589, 1e-12);
  EXPECT_NEAR(r.degrees_of_freedom, 4.0, 1e-12);
  EXPECT_NEAR(r.p_value, 0.2878641347266908, 1e-9);
}

TEST(WelchTTest, UnequalVariancesAndCounts) {
  const auto r = welchTTest(make(30, 10, 4), make(25, 11.5, 9));
  EXPECT_NEAR(r.t_statistic, -2.135605490443123, 1e-12);
  EXPECT_NEAR(r.degrees_of_freedom, 40.47508602013509, 1e-9);
  EXPECT_NEAR(r.p_value, 0.0388119716663103, 1e-9);
}

TEST(WelchTTest, LargeTimingGapGivesZero) {
  // Two timing columns two orders of magnitude apart.
  const auto r = welchTTest(make(100, 0.856, 0.01 * 0.01), make(100, 0.00906, 0.0001 * 0.0001));
  EXPECT_LT(r.p_value, 1e-100);
}

TEST(WelchTTest, PValuesBelowFloorAreZero) {
  const auto r = welchTTest(make(100, 1.0, 1e-8), make(100, 0.0, 1e-8));
  EXPECT_EQ(r.p_value, 0.0);
}

TEST(WelchTTest, IdenticalSummaries) {
  const auto r = welchTTest(make(10, 3.5, 2.0), make(10, 3.5, 2.0));
  EXPECT_EQ(r.t_statistic, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(WelchTTest, ZeroVarianceConventions) {
  EXPECT_EQ(welchTTest(make(5, 1, 0), make(5, 1, 0)).p_value, 1.0);
  const auto r = welchTTest(make(5, 1, 0), make(5, 2, 0));
  EXPECT_EQ(r.p_value, 0.0);
  EXPECT_EQ(r.t_statistic, -std::numeric_limits<double>::infinity());
}

TEST(WelchTTest, CountBelowTwoIsAContractViolation) {
  EXPECT_THROW(welchTTest(make(1, 1, 0), make(5, 2, 1)), ContractViolation);
  EXPECT_THROW(welchTTest(make(5, 1, 1), make(1, 2, 0)), ContractViolation);
}

TEST(WelchTTest, SwappingArgumentsNegatesT) {
  RandomSource src(2);
  for (int i = 0; i < 200; ++i) {
    const auto a = make(2 + src.nextInt(50), src.nextReal() * 10, 0.01 + src.nextReal() * 5);
    const auto b = make(2 + src.nextInt(50), src.nextReal() * 10, 0.01 + src.nextReal() * 5);
    const auto ab = welchTTest(a, b);
    const auto ba = welchTTest(b, a);
    ASSERT_EQ(ab.p_value, ba.p_value);
    ASSERT_EQ(ab.t_statistic, -ba.t_statistic);
    ASSERT_GE(ab.p_value, 0.0);
    ASSERT_LE(ab.p_value, 1.0);
    ASSERT_GT(ab.degrees_of_freedom, 0.0);
  }
}

TEST(WelchTTest, PValueFallsAsMeansSeparate) {
  double previous = 1.0;
  for (double gap = 0.0; gap <= 5.0; gap += 0.05) {
    const double p = welchTTest(make(20, 0, 1.5), make(20, gap, 2.5)).p_value;
    ASSERT_LE(p, previous) << "gap " << gap;
    previous = p;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(WelchTTest, EqualVariancesAndCountsGivePooledDf) {
  for (std::size_t count : {2u, 3u, 10u, 100u}) {
    const auto r = welchTTest(make(count, 0, 3), make(count, 1, 3));
    EXPECT_NEAR(r.degrees_of_freedom, 2.0 * static_cast<double>(count - 1), 1e-9);
  }
}

TEST(ChiSquare, PerfectFit) {
  const std::vector<double> obs{10, 20, 30};
  const auto r = chiSquareGoodnessOfFit(obs, obs);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_EQ(r.degrees_of_freedom, 2u);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
}

TEST(ChiSquare, TwoBinExample) {
  const std::vector<double> obs{60, 40};
  const std::vector<double> exp{50, 50};
  const auto r = chiSquareGoodnessOfFit(obs, exp);
  EXPECT_DOUBLE_EQ(r.statistic, 4.0);
  EXPECT_EQ(r.degrees_of_freedom, 1u);
  EXPECT_NEAR(r.p_value, 0.04550026389635857, 1e-10);
}

TEST(ChiSquare, InputChecks) {
  const std::vector<double> two{10, 10};
  const std::vector<double> three{10, 10, 10};
  const std::vector<double> one{10};
  const std::vector<double> sparse{4, 16};
  EXPECT_THROW(chiSquareGoodnessOfFit(two, three), ContractViolation);
  EXPECT_THROW(chiSquareGoodnessOfFit(one, one), ContractViolation);
  EXPECT_THROW(chiSquareGoodnessOfFit(two, sparse), ContractViolation);
  EXPECT_THROW(chiSquareHomogeneity(two, three), ContractViolation);
  EXPECT_THROW(chiSquareHomogeneity(one, one), ContractViolation);
}

TEST(ChiSquare, HomogeneityExample) {
  const std::vector<double> a{30, 70};
  const std::vector<double> b{45, 55};
  const auto r = chiSquareHomogeneity(a, b);
  EXPECT_NEAR(r.statistic, 4.8, 1e-12);
  EXPECT_EQ(r.degrees_of_freedom, 1u);
  EXPECT_NEAR(r.p_value, 0.028459736916310638, 1e-10);
}

TEST(ChiSquare, UniformGeneratorPassesTenBins) {
  RandomSource src(3);
  std::vector<double> obs(10, 0.0);
  for (int i = 0; i < 100'000; ++i) obs[src.nextInt(10)] += 1.0;
  const std::vector<double> exp(10, 10'000.0);
  EXPECT_GT(chiSquareGoodnessOfFit(obs, exp).p_value, 0.001);
}

TEST(SpecialFunctions, ReferenceValues) {
  EXPECT_NEAR(regularizedIncompleteBeta(2.5, 0.5, 0.3), 0.018927124071945658, 1e-12);
  EXPECT_NEAR(regularizedIncompleteBeta(10, 20, 0.4), 0.7853183897628262, 1e-10);
  EXPECT_NEAR(regularizedUpperGamma(3, 2), 0.6766764161830634, 1e-10);
  EXPECT_NEAR(regularizedUpperGamma(0.5, 0.1), 0.6547208460185768, 1e-10);
  EXPECT_NEAR(chiSquareSurvival(10, 5), 0.07523524614651217, 1e-10);
  EXPECT_NEAR(studentTwoTailedP(2.0, 7.5), 0.08289699529816622, 1e-10);
}

TEST(SpecialFunctions, Endpoints) {
  EXPECT_EQ(regularizedIncompleteBeta(2, 3, 0), 0.0);
  EXPECT_EQ(regularizedIncompleteBeta(2, 3, 1), 1.0);
  EXPECT_EQ(regularizedUpperGamma(2, 0), 1.0);
  EXPECT_EQ(studentTwoTailedP(0.0, 5), 1.0);
  EXPECT_EQ(chiSquareSurvival(0.0, 3), 1.0);
}

TEST(SpecialFunctions, BetaSymmetry) {
  for (double x : {0.1, 0.3, 0.5, 0.8}) {
    EXPECT_NEAR(regularizedIncompleteBeta(3.5, 1.5, x), 1.0 - regularizedIncompleteBeta(1.5, 3.5, 1 - x), 1e-12);
  }
}

}  // namespace
}  // namespace bitga::stats
