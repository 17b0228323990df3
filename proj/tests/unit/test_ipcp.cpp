#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sidkit/error.hpp"
#include "sidkit/ipcp.hpp"

using namespace sidkit;

namespace {

double poisson(double r, int k) { return std::exp(k * std::log(r) - r - std::lgamma(k + 1.0)); }

}  // namespace

TEST(Ipcp, CharFnGridMatchesDirectSum) {
  SignedSeq p(-1, {0.2, 0.5, 0.3});
  const auto g = charfn_grid(p, 16);
  for (int j = 0; j < 16; ++j) {
    const double t = 2.0 * std::numbers::pi * j / 16;
    const std::complex<double> direct =
        0.2 * std::polar(1.0, -t) + 0.5 + 0.3 * std::polar(1.0, t);
    EXPECT_LT(std::abs(g.values[j] - direct), 1e-15);
  }
  EXPECT_THROW(charfn_grid(p, 12), Error);
  try {
    charfn_grid(SignedSeq(0, std::vector<double>(20, 0.05)), 16);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "GridTooCoarse");
  }
}

TEST(Ipcp, ExtractShiftedBernoulli) {
  const auto g = charfn_grid(SignedSeq(0, {1.0 / 3.0, 2.0 / 3.0}), 1024);
  EXPECT_EQ(winding_number(g), 1);
  const auto p = extract_ipcp_params(g);
  const double l = std::log(1.5);
  EXPECT_EQ(p.drift, 1);
  EXPECT_NEAR(p.lambda, l, 1e-12);
  for (int k = 1; k <= 20; ++k) {
    EXPECT_NEAR(p.negative[k - 1], (k % 2 ? 1.0 : -1.0) / (k * std::pow(2.0, k) * l), 1e-12);
    EXPECT_NEAR(p.positive[k - 1], 0.0, 1e-12);
  }
  EXPECT_LT(reconstruction_error(g, p), 1e-10);
  EXPECT_NEAR(p.alpha_sum(), 1.0, 1e-12);
}

TEST(Ipcp, RawBranchMeanLogIsJensen) {
  // Mean of the principal log of 1/3 + 2/3 e^{i theta}: real part ln(2/3) by
  // Jensen's formula (zero at -1/2 inside the disk), imaginary part 0 by symmetry.
  const auto g = charfn_grid(SignedSeq(0, {1.0 / 3.0, 2.0 / 3.0}), 1024);
  const auto c = log_fourier_coefficients(g, LogBranch::Raw, 8);
  EXPECT_NEAR(c.at(0).real(), std::log(2.0 / 3.0), 1e-8);
  EXPECT_NEAR(c.at(0).imag(), 0.0, 1e-12);
  // The raw log has a jump, so its coefficients decay like 1/n.
  EXPECT_GT(std::abs(c.at(8)), 0.05);
}

TEST(Ipcp, VanishingCharFn) {
  const auto g = charfn_grid(SignedSeq(0, {0.5, 0.5}), 64);
  try {
    winding_number(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "VanishingCharFn");
  }
}

TEST(Ipcp, ClassifyContrast) {
  const auto r = classify_ipcp(SignedSeq(0, {1.0 / 3.0, 2.0 / 3.0}));
  EXPECT_EQ(r.verdict, Verdict::Yes);
  EXPECT_TRUE(r.contrast);
  EXPECT_EQ(classify_ipcp(SignedSeq(0, {0.5, 0.5})).verdict, Verdict::No);
  const auto dpcp_too = classify_ipcp(SignedSeq(0, {0.7, 0.3}));
  EXPECT_EQ(dpcp_too.verdict, Verdict::Yes);
  EXPECT_FALSE(dpcp_too.contrast);
}

TEST(Ipcp, SkellamAgainstBruteForce) {
  IpcpParams p;
  p.lambda = 2.0;
  p.positive = {0.75};
  p.negative = {0.25};
  const auto r = ipcp_pmf(p, -10, 10);
  for (int k = -10; k <= 10; ++k) {
    double oracle = 0.0;
    for (int b = std::max(0, -k); b < 200; ++b) oracle += poisson(1.5, k + b) * poisson(0.5, b);
    EXPECT_NEAR(r.pmf.at(k), oracle, 1e-13) << k;
  }
  EXPECT_NEAR(r.lambda_plus, 1.5, 1e-15);
  EXPECT_NEAR(r.lambda_minus, 0.5, 1e-15);
  EXPECT_FALSE(r.negative_side_rate);
}

TEST(Ipcp, DriftShiftsMass) {
  IpcpParams p;
  p.lambda = 1.0;
  p.positive = {1.0};
  p.drift = -2;
  const auto r = ipcp_pmf(p, -3, 3);
  for (int k = -2; k <= 3; ++k) EXPECT_NEAR(r.pmf.at(k), poisson(1.0, k + 2), 1e-14);
  EXPECT_NEAR(r.pmf.at(-3), 0.0, 1e-15);
}

TEST(Ipcp, RepresentationsAgree) {
  IpcpParams p;
  p.lambda = 1.3;
  p.positive = {0.6, -0.1};
  p.negative = {0.4, 0.1};
  p.drift = 1;
  const auto comps = weighted_signed_poisson_components(p);
  EXPECT_EQ(comps.size(), 4u);
  for (double t : {0.0, 0.4, 1.7, 3.0, 5.5}) {
    EXPECT_LT(std::abs(compound_poisson_charfn(p, t) - p.charfn(t)), 1e-14);
    EXPECT_LT(std::abs(component_exponent(comps, t) - p.exponent(t)), 1e-14);
  }
  const auto a = p.alpha();
  EXPECT_DOUBLE_EQ(a.at(0), 0.0);
  EXPECT_DOUBLE_EQ(a.at(-2), 0.1);
  const auto back = IpcpParams::from_alpha(p.lambda, a, p.drift);
  EXPECT_EQ(back.positive, p.positive);
  EXPECT_EQ(back.negative, p.negative);
}
