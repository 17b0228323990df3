#include <gtest/gtest.h>

#include <cmath>

#include "sidkit/dpcp.hpp"
#include "sidkit/error.hpp"
#include "sidkit/special.hpp"

using namespace sidkit;

TEST(MittagLeffler, OrderOneIsExp) {
  for (double x = -5.0; x <= 5.0; x += 0.25) {
    const auto v = mittag_leffler(MLQuery(1.0, x));
    EXPECT_NEAR(v.value, std::exp(x), 1e-12 * std::exp(x));
  }
}

TEST(MittagLeffler, OrderOneHalfClosedForm) {
  // E_{1/2}(x) = exp(x^2) erfc(-x).
  for (double x = -20.0; x <= 5.0; x += 0.5) {
    const auto v = mittag_leffler(MLQuery(0.5, x));
    const double oracle = std::exp(x * x) * std::erfc(-x);
    EXPECT_NEAR(v.value, oracle, 1e-10 * oracle) << x;
    EXPECT_NE(v.precision, Precision::Overflow);
  }
  EXPECT_NEAR(mittag_leffler(MLQuery(0.5, -1.0)).value, 0.42758357615580705, 1e-14);
}

TEST(MittagLeffler, PositiveOnGrid) {
  for (int i = 1; i <= 10; ++i) {
    for (double x = -30.0; x <= 30.0; x += 1.5) {
      const auto v = mittag_leffler(MLQuery(0.1 * i, x));
      if (v.precision == Precision::Overflow) {
        EXPECT_TRUE(std::isfinite(v.log_value));
      } else {
        EXPECT_GT(v.value, 0.0) << i << " " << x;
      }
    }
  }
}

TEST(MittagLeffler, OverflowKeepsLog) {
  const auto v = mittag_leffler(MLQuery(0.1, 30.0));
  EXPECT_EQ(v.precision, Precision::Overflow);
  EXPECT_TRUE(std::isinf(v.value));
  EXPECT_GT(v.log_value, 709.0);
}

TEST(MittagLeffler, Domain) {
  EXPECT_THROW(MLQuery(0.0, 1.0), Error);
  EXPECT_THROW(MLQuery(1.5, 1.0), Error);
  EXPECT_THROW(MLQuery(0.5, std::nan("")), Error);
}

TEST(FractionalPoisson, OrderOneIsPoisson) {
  const auto p = fractional_poisson_pmf(2.0, 1.5, 1.0, 30);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_NEAR(p.at(n), std::exp(n * std::log(3.0) - 3.0 - std::lgamma(n + 1.0)), 1e-12);
  }
}

TEST(FractionalPoisson, ZeroMassIsMittagLeffler) {
  for (double nu : {0.3, 0.6, 0.9}) {
    const auto p = fractional_poisson_pmf(1.0, 2.0, nu, 60);
    const double c = std::pow(2.0, nu);
    EXPECT_NEAR(p.at(0), mittag_leffler(MLQuery(nu, -c)).value, 1e-12);
    double total = 0.0;
    for (double x : p.coeffs()) {
      EXPECT_GE(x, 0.0);
      total += x;
    }
    EXPECT_LT(total, 1.0 + 1e-10);
  }
}

TEST(FractionalPoisson, ClassifiedAsDpcp) {
  const auto p = fractional_poisson_pmf(0.5, 1.0, 0.7, 60);
  EXPECT_EQ(classify_dpcp(p).verdict, Verdict::Yes);
}

TEST(FractionalPoisson, LargeRateSmallNuRefused) {
  try {
    fractional_poisson_pmf(50.0, 1.0, 0.2, 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "ReducedPrecision");
    EXPECT_EQ(e.kind(), ErrorKind::Numerical);
  }
}

TEST(MixedPoisson, TwoAtoms) {
  MixingLaw mix({{1.0, 0.5}, {2.0, 0.5}});
  const auto p = mixed_poisson_pmf(mix, 25);
  EXPECT_NEAR(p.at(0), 0.5 * (std::exp(-1.0) + std::exp(-2.0)), 1e-15);
  EXPECT_NEAR(p.at(3), 0.5 * (std::exp(-1.0) / 6 + 8 * std::exp(-2.0) / 6), 1e-15);
  EXPECT_NEAR(mix.pgf(0.0), p.at(0), 1e-15);
  EXPECT_EQ(classify_dpcp(p).verdict, Verdict::Yes);
}

TEST(MixedPoisson, Validation) {
  EXPECT_THROW(MixingLaw({}), Error);
  EXPECT_THROW(MixingLaw({{1.0, 0.4}}), Error);
  EXPECT_THROW(MixingLaw({{-1.0, 1.0}}), Error);
}
