// Copyright 2026 The edfnorm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edfnorm/edf_tests.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "edfnorm/alternatives.h"
#include "edfnorm/errors.h"
#include "edfnorm/numerics.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace edfnorm {
namespace {

oracle::EdfFunctionals brute_force(const std::vector<double>& x,
                                   VarianceDivisor divisor) {
  const Estimates e = mle(x, divisor);
  std::vector<double> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = (x[i] - e.mu_hat) / std::sqrt(e.sigma2_hat);
  }
  return oracle::brute_force_functionals(s);
}

double field(const oracle::EdfFunctionals& f, EdfTest test) {
  switch (test) {
    case EdfTest::kD:
      return f.d;
    case EdfTest::kW2:
      return f.w2;
    case EdfTest::kA2:
      return f.a2;
    case EdfTest::kG:
      return f.g;
    case EdfTest::kU2:
      return f.u2;
  }
  return 0.0;
}

TEST(Sample, RejectsDegenerateInput) {
  EXPECT_THROW(Sample({1.0, 2.0}), DomainError);
  EXPECT_THROW(Sample({1.0, 2.0, NAN}), DomainError);
  EXPECT_THROW(Sample({1.0, 2.0, INFINITY}), DomainError);
  EXPECT_THROW(Sample({3.0, 3.0, 3.0, 3.0}), DegenerateSampleError);
  EXPECT_NO_THROW(Sample({1.0, 2.0, 3.0}));
}

TEST(Mle, MomentsWithBothDivisors) {
  const std::vector<double> x = {0.0, 0.0, 2.0, 2.0};
  const Estimates a = mle(x);
  EXPECT_DOUBLE_EQ(a.mu_hat, 1.0);
  EXPECT_DOUBLE_EQ(a.sigma2_hat, 1.0);
  const Estimates b = mle(x, VarianceDivisor::kNMinus1);
  EXPECT_DOUBLE_EQ(b.mu_hat, 1.0);
  EXPECT_DOUBLE_EQ(b.sigma2_hat, 4.0 / 3.0);
}

TEST(Statistics, SmallSampleAgainstBruteForce) {
  const std::vector<double> x = {-1.0, -0.5, 0.5, 1.0};
  const Sample sample(x);
  const auto expected = brute_force(x, VarianceDivisor::kN);
  for (EdfTest test : kAllTests) {
    const TestOutcome out = statistic(test, sample);
    EXPECT_DOUBLE_EQ(out.mu_hat, 0.0);
    EXPECT_DOUBLE_EQ(out.sigma2_hat, 0.625);
    EXPECT_NEAR(out.statistic, scale_statistic(test, field(expected, test), 4),
                1e-8)
        << to_string(test);
    EXPECT_FALSE(out.p_value.has_value());
  }
}

TEST(Statistics, RandomSamplesAgainstBruteForce) {
  std::mt19937_64 gen(12345);
  std::uniform_int_distribution<int> size(5, 500);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(gen);
    std::vector<double> x(static_cast<std::size_t>(n));
    // Mix normal and skewed samples so the statistics are not all tiny.
    for (auto& v : x) v = trial % 2 == 0 ? normal(gen) : expo(gen);
    const VarianceDivisor divisor =
        trial % 3 == 0 ? VarianceDivisor::kNMinus1 : VarianceDivisor::kN;
    const auto expected = brute_force(x, divisor);
    const RawStatistics raw =
        raw_statistics(fitted_tails(x, mle(x, divisor)));
    for (EdfTest test : kAllTests) {
      // A clamped Anderson-Darling value is deliberately not the exact one.
      if (test == EdfTest::kA2 && raw.clamped) continue;
      EXPECT_NEAR(raw.get(test), field(expected, test), 1e-8)
          << "trial " << trial << " n = " << n << " " << to_string(test);
    }
  }
}

TEST(Statistics, UpperTailKeepsPrecision) {
  // One outlier among 62 values sits near 7.8 standard deviations, where
  // 1 - Phi is a few 1e-15 and cannot be formed as 1 - z in double.
  std::vector<double> x(62);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = 1e-3 * static_cast<double>(i % 7);
  }
  x.back() = 1e3;
  const Estimates e = mle(x);
  std::vector<double> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = (x[i] - e.mu_hat) / std::sqrt(e.sigma2_hat);
  }
  const double top = *std::max_element(s.begin(), s.end());
  ASSERT_GT(oracle::phi_cdf(-top), 1e-15);
  ASSERT_LT(oracle::phi_cdf(-top), 1e-14);
  const RawStatistics r = raw_statistics(fitted_tails(x, e));
  EXPECT_FALSE(r.clamped);
  EXPECT_NEAR(r.a2, oracle::brute_force_functionals(s).a2, 1e-10);
}

TEST(Statistics, ScalingFactors) {
  EXPECT_DOUBLE_EQ(scale_statistic(EdfTest::kD, 0.1, 100), 1.0);
  EXPECT_DOUBLE_EQ(scale_statistic(EdfTest::kG, 0.1, 100), 1.0);
  EXPECT_DOUBLE_EQ(scale_statistic(EdfTest::kW2, 0.1, 100), 10.0);
  EXPECT_DOUBLE_EQ(scale_statistic(EdfTest::kA2, 0.1, 100), 10.0);
  EXPECT_DOUBLE_EQ(scale_statistic(EdfTest::kU2, 0.1, 100), 10.0);
}

TEST(Statistics, LocationScaleAndPermutationInvariance) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(60);
  for (auto& v : x) v = normal(gen);
  std::vector<double> y(x.size());
  std::transform(x.begin(), x.end(), y.begin(),
                 [](double v) { return 3.0 + 2.5 * v; });
  std::vector<double> p = x;
  std::shuffle(p.begin(), p.end(), gen);
  for (EdfTest test : kAllTests) {
    const double base = statistic(test, Sample(x)).statistic;
    EXPECT_NEAR(statistic(test, Sample(y)).statistic, base, 1e-12)
        << to_string(test);
    EXPECT_NEAR(statistic(test, Sample(p)).statistic, base, 1e-12)
        << to_string(test);
  }
}

TEST(Statistics, WatsonNeverExceedsCramerVonMises) {
  std::mt19937_64 gen(11);
  std::gamma_distribution<double> gamma(2.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> x(30);
    for (auto& v : x) v = gamma(gen);
    const RawStatistics r = raw_statistics(fitted_tails(x, mle(x)));
    EXPECT_LE(r.u2, r.w2 + 1e-15);
    EXPECT_LE(r.g, r.d * 2.0 + 1e-15);
    EXPECT_GE(r.a2, r.w2);
  }
}

TEST(Statistics, ClampFlagOnExtremeOutlier) {
  std::vector<double> x(200, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = 1e-3 * static_cast<double>(i % 7);
  x.back() = 1e6;
  const TestOutcome a2 = statistic(EdfTest::kA2, Sample(x));
  EXPECT_TRUE(a2.clamped);
  EXPECT_TRUE(std::isfinite(a2.statistic));
  EXPECT_FALSE(statistic(EdfTest::kW2, Sample(x)).clamped);
}

TEST(MonteCarlo, PValueFormulaAndBoundary) {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> x(25);
  for (auto& v : x) v = normal(gen);
  const Sample sample(x);
  const std::size_t r = 1000;
  const auto null = null_replicates(EdfTest::kW2, 25, r, 77);
  const TestOutcome out = mc_pvalue(EdfTest::kW2, sample, r, 77);
  const auto exceed = std::count_if(null.begin(), null.end(), [&](double v) {
    return v >= out.statistic;
  });
  EXPECT_DOUBLE_EQ(*out.p_value, (1.0 + static_cast<double>(exceed)) / 1001.0);
  EXPECT_EQ(*out.mc_replicates, r);

  // A perfectly normal-looking sample: every replicate is at least as large.
  std::vector<double> q(25);
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = norm_quantile((static_cast<double>(i) + 0.5) / 25.0);
  }
  const TestOutcome best = mc_pvalue(EdfTest::kW2, Sample(q), r, 5);
  EXPECT_LE(*best.p_value, 1.0);
  EXPECT_GT(*best.p_value, 0.99);
}

TEST(MonteCarlo, RequiresEnoughReplicates) {
  const Sample sample({1.0, 2.0, 4.0});
  EXPECT_THROW(mc_pvalue(EdfTest::kD, sample, kMinReplicates - 1, 1),
               DomainError);
}

TEST(MonteCarlo, DeterministicAcrossThreadCounts) {
  const auto a = null_raw_replicates(40, 2000, 9, {}, 1);
  const auto b = null_raw_replicates(40, 2000, 9, {}, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (EdfTest test : kAllTests) {
      ASSERT_EQ(a[i].get(test), b[i].get(test));
    }
  }
  const std::vector<EdfTest> tests(kAllTests.begin(), kAllTests.end());
  const Sample sample({0.3, -1.2, 2.2, 0.1, 0.9, -0.4});
  const auto p1 = mc_pvalues(tests, sample, 1000, 4, {}, 1);
  const auto p3 = mc_pvalues(tests, sample, 1000, 4, {}, 3);
  for (std::size_t i = 0; i < p1.size(); ++i) {
    EXPECT_EQ(*p1[i].p_value, *p3[i].p_value);
  }
}

TEST(MonteCarlo, PValuesUniformUnderNull) {
  // Samples from N(5, 9); the null replicates are standard normal, which is
  // legitimate because the statistics are location-scale invariant.
  const std::size_t runs = 500;
  const std::size_t n = 20;
  const std::vector<EdfTest> tests(kAllTests.begin(), kAllTests.end());
  std::vector<std::vector<double>> p(tests.size());
  std::mt19937_64 gen(2718);
  std::normal_distribution<double> normal(5.0, 3.0);
  for (std::size_t run = 0; run < runs; ++run) {
    std::vector<double> x(n);
    for (auto& v : x) v = normal(gen);
    const auto out = mc_pvalues(tests, Sample(x), 1000, 1000 + run);
    for (std::size_t t = 0; t < tests.size(); ++t) {
      p[t].push_back(*out[t].p_value);
    }
  }
  for (std::size_t t = 0; t < tests.size(); ++t) {
    EXPECT_LT(oracle::ks_distance(p[t], [](double u) {
                return std::clamp(u, 0.0, 1.0);
              }),
              1.628 / std::sqrt(static_cast<double>(runs)))
        << to_string(tests[t]);
  }
}

TEST(MonteCarlo, DetectsLehmannAlternative) {
  // Lehmann theta = 1 is hard to see at small n; at n = 4000 the median
  // Anderson-Darling p-value is below 0.05.
  const std::size_t n = 4000;
  const std::size_t r = 1000;
  const auto null = null_replicates(EdfTest::kA2, n, r, 31);
  std::vector<double> p;
  for (std::uint64_t run = 0; run < 100; ++run) {
    const auto x = sample(*lehmann_family(), 1.0, n, 500 + run);
    const double stat = statistic(EdfTest::kA2, Sample(x)).statistic;
    const auto exceed = std::count_if(null.begin(), null.end(),
                                      [&](double v) { return v >= stat; });
    p.push_back((1.0 + static_cast<double>(exceed)) / (r + 1.0));
  }
  std::nth_element(p.begin(), p.begin() + 50, p.end());
  EXPECT_LT(p[50], 0.05);
}

}  // namespace
}  // namespace edfnorm
