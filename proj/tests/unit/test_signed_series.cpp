#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sidkit/error.hpp"
#include "sidkit/signed_series.hpp"

using namespace sidkit;

namespace {

double binomial_half(int k) {
  double c = 1.0;
  for (int j = 0; j < k; ++j) c *= (0.5 - j) / (j + 1);
  return c;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

TEST(SignedSeq, WindowAccessAndSum) {
  SignedSeq s(-2, {0.25, -0.5, 1.25});
  EXPECT_EQ(s.order(), 0);
  EXPECT_DOUBLE_EQ(s.at(-2), 0.25);
  EXPECT_DOUBLE_EQ(s.at(-3), 0.0);
  EXPECT_DOUBLE_EQ(s.at(5), 0.0);
  EXPECT_DOUBLE_EQ(s.sum(), 1.0);
  EXPECT_DOUBLE_EQ(total_variation(s), 2.0);
  EXPECT_DOUBLE_EQ(s.tail_indicator(), 1.25);
}

TEST(SignedSeq, CanonicalTrimsOnlyExact) {
  SignedSeq exact(0, {1.0, 0.5, 1e-17, 0.0});
  EXPECT_EQ(exact.canonical().size(), 2u);
  SignedSeq cut(0, {1.0, 0.5, 1e-17, 0.0}, true);
  EXPECT_EQ(cut.canonical().size(), 4u);
}

TEST(SignedSeq, ShiftReflectTruncate) {
  SignedSeq s(1, {1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(s.shifted(2).at(3), 1.0);
  const auto r = s.reflected();
  EXPECT_EQ(r.offset(), -3);
  EXPECT_DOUBLE_EQ(r.at(-1), 1.0);
  EXPECT_DOUBLE_EQ(r.at(-3), 3.0);
  const auto t = s.truncated_to(2);
  EXPECT_TRUE(t.truncated());
  EXPECT_EQ(t.order(), 2);
  EXPECT_THROW(s.truncated_to(2).reflected(), Error);
  EXPECT_THROW(t.truncated_to(5), Error);
}

TEST(SignedSeq, ConvolveMatchesProductOfEvaluations) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(1 + trial % 5), b(2 + trial % 3);
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    SignedSeq sa(-1, a), sb(2, b);
    const auto c = convolve(sa, sb);
    for (double z : {0.3, -0.7, 1.1}) {
      auto eval = [z](const SignedSeq& s) {
        double acc = 0.0;
        for (auto k = s.offset(); k <= s.order(); ++k) acc += s.at(k) * std::pow(z, static_cast<double>(k));
        return acc;
      };
      EXPECT_NEAR(eval(c), eval(sa) * eval(sb), 1e-12);
    }
  }
}

TEST(SignedSeq, ConvolveTruncatedOrder) {
  SignedSeq a(0, {1.0, 1.0, 1.0}, true);
  SignedSeq b(1, {1.0, 1.0, 1.0, 1.0, 1.0});
  const auto c = convolve(a, b);
  EXPECT_TRUE(c.truncated());
  EXPECT_EQ(c.order(), 3);
  EXPECT_DOUBLE_EQ(c.at(3), 3.0);
}

TEST(PowerSeries, ExpOfLinearIsExponentialSeries) {
  const double a = 1.7;
  const auto e = series_exp(PowerSeries({0.0, a, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}));
  for (int n = 0; n <= 10; ++n) EXPECT_NEAR(e[n], std::pow(a, n) / factorial(n), 1e-13);
}

TEST(PowerSeries, LogOfOnePlusZ) {
  std::vector<double> s(31, 0.0);
  s[0] = 1.0;
  s[1] = 1.0;
  const auto l = series_log(PowerSeries(s));
  EXPECT_NEAR(l[0], 0.0, 1e-15);
  for (int n = 1; n <= 30; ++n) EXPECT_NEAR(l[n], (n % 2 ? 1.0 : -1.0) / n, 1e-13);
}

TEST(PowerSeries, SquareRootIsBinomial) {
  std::vector<double> s(41, 0.0);
  s[0] = 1.0;
  s[1] = 1.0;
  const auto r = series_pow(PowerSeries(s), 0.5);
  for (int k = 0; k <= 40; ++k) EXPECT_NEAR(r[k], binomial_half(k), 1e-12);
}

TEST(PowerSeries, LogExpRoundTripRandom) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> s(25);
    for (auto& x : s) x = u(rng);
    const auto back = series_log(series_exp(PowerSeries(s)));
    EXPECT_NEAR(back[0], s[0], 1e-13);
    for (int k = 1; k < 25; ++k) EXPECT_NEAR(back[k], s[k], 1e-10);
  }
}

TEST(PowerSeries, LogRequiresPositiveConstant) {
  try {
    series_log(PowerSeries({0.0, 1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "NonPositiveConstantTerm");
  }
}

TEST(PowerSeries, FromSeqCapsTruncatedOrder) {
  SignedSeq s(0, {1.0, 2.0, 3.0}, true);
  EXPECT_EQ(PowerSeries::from_seq(s, 10).order(), 2);
  SignedSeq exact(0, {1.0, 2.0});
  const auto p = PowerSeries::from_seq(exact, 5);
  EXPECT_EQ(p.order(), 5);
  EXPECT_DOUBLE_EQ(p[4], 0.0);
}
