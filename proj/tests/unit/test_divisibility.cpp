#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sidkit/divisibility.hpp"
#include "sidkit/dpcp.hpp"
#include "sidkit/error.hpp"

using namespace sidkit;

namespace {

// Generalized binomial C(r, k).
double binom(double r, int k) {
  double c = 1.0;
  for (int j = 0; j < k; ++j) c *= (r - j) / (j + 1);
  return c;
}

std::vector<double> self_convolve(const std::vector<double>& a, int n, std::size_t keep) {
  std::vector<double> acc(keep, 0.0);
  acc[0] = 1.0;
  for (int i = 0; i < n; ++i) {
    std::vector<double> next(keep, 0.0);
    for (std::size_t x = 0; x < keep; ++x)
      for (std::size_t y = 0; x + y < keep && y < a.size(); ++y) next[x + y] += acc[x] * a[y];
    acc = next;
  }
  return acc;
}

}  // namespace

TEST(Root, HalfCoinIsBinomialSeries) {
  const auto h = nth_root_pmf(SignedSeq(0, {0.5, 0.5}), 2, 64);
  EXPECT_TRUE(h.truncated());
  EXPECT_EQ(h.order(), 64);
  for (int k = 0; k <= 64; ++k) EXPECT_NEAR(h.at(k), std::sqrt(0.5) * binom(0.5, k), 1e-13);
}

TEST(Root, ConvolutionPowerRecoversInput) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<double> p{1.5 + u(rng), u(rng), u(rng)};
    double s = p[0] + p[1] + p[2];
    for (auto& x : p) x /= s;
    for (int n : {2, 3, 5}) {
      const auto root = nth_root_pmf(SignedSeq(0, p), n, 40);
      const auto back = self_convolve(root.coeffs(), n, 41);
      for (int k = 0; k <= 40; ++k) EXPECT_NEAR(back[k], k < 3 ? p[k] : 0.0, 1e-10);
    }
  }
}

TEST(Root, IdentityAndErrors) {
  SignedSeq p(0, {0.25, 0.75});
  EXPECT_EQ(nth_root_pmf(p, 1).coeffs(), p.coeffs());
  EXPECT_THROW(nth_root_pmf(p, 0), Error);
  EXPECT_THROW(nth_root_pmf(SignedSeq(1, {1.0}), 2), Error);
}

TEST(NormGrowth, BinomialTotalVariation) {
  const std::vector<int> ns{1, 2, 3};
  const auto g = norm_growth(SignedSeq(0, {0.3, 0.7}), 0.5, ns, 64);
  ASSERT_EQ(g.size(), 3u);
  // r n = 1 is the law itself; r n = 0.5 and 1.5 are signed series.
  double tv_half = 0.0, tv_three_halves = 0.0;
  for (int k = 0; k <= 64; ++k) {
    tv_half += std::abs(std::pow(0.3, 0.5 - k) * std::pow(0.7, k) * binom(0.5, k));
    tv_three_halves += std::abs(std::pow(0.3, 1.5 - k) * std::pow(0.7, k) * binom(1.5, k));
  }
  EXPECT_NEAR(g[0], tv_half, 1e-12 * tv_half);
  EXPECT_NEAR(g[1], 1.0, 1e-12);
  EXPECT_NEAR(g[2], tv_three_halves, 1e-12 * tv_three_halves);
}

TEST(Jorgensen, BernoulliIntegersOnly) {
  const std::vector<double> grid{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  const auto rep = jorgensen_probe(SignedSeq(0, {0.3, 0.7}), grid, 200);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const bool integer = grid[i] == std::floor(grid[i]);
    EXPECT_EQ(rep.admissible[i], integer) << grid[i];
  }
  // Most negative coefficient of G^{1/2}: the oracle scans the binomial series.
  double oracle = 0.0;
  for (int k = 0; k <= 200; ++k) {
    oracle = std::min(oracle, std::exp((0.5 - k) * std::log(0.3) + k * std::log(0.7)) * binom(0.5, k));
  }
  EXPECT_NEAR(rep.min_coefficient[0], oracle, 1e-12 * std::abs(oracle));
}

TEST(Jorgensen, SignedDpcpNotAdmissibleAtSmallIntegers) {
  // exp{1.2 z - 0.2 z^2 - 1}: P_4 = e^{-1}(a^4/24 + a^2 b/2 + b^2/2), a = 1.2, b = -0.2.
  const auto pmf = pmf_from_params_recursive(DpcpParams(1.0, SignedSeq(1, {1.2, -0.2})), 200);
  const double a = 1.2, b = -0.2;
  const double p4 = std::exp(-1.0) * (std::pow(a, 4) / 24 + a * a * b / 2 + b * b / 2);
  EXPECT_LT(p4, -0.01);
  EXPECT_NEAR(pmf.at(4), p4, 1e-14);
  const std::vector<double> grid{1.0, 2.0};
  const auto rep = jorgensen_probe(pmf, grid, 200);
  EXPECT_FALSE(rep.admissible[0]);
  EXPECT_FALSE(rep.admissible[1]);
}

TEST(Threshold, ShortHorizonMatchesQuadraticBound) {
  // Through degree 2: P_2 >= 0 iff lambda >= -2 a_2 / a_1^2.
  std::vector<double> grid;
  for (int i = 1; i <= 40; ++i) grid.push_back(0.025 * i);
  const auto r = min_lambda_threshold(SignedSeq(1, {1.2, -0.2}), grid, 2);
  ASSERT_TRUE(r.threshold);
  EXPECT_NEAR(*r.threshold, 0.4 / 1.44, 1e-9);
  ASSERT_TRUE(r.bracket);
  EXPECT_LT(r.bracket->first, r.bracket->second);
}

TEST(Threshold, LongHorizonHasNoThresholdOnModestGrid) {
  // The same jump law has some negative P_n below n = 200 for every lambda up to 5.
  std::vector<double> grid{0.5, 1.0, 2.0, 5.0};
  const auto r = min_lambda_threshold(SignedSeq(1, {1.2, -0.2}), grid, 200);
  EXPECT_FALSE(r.threshold);
  for (bool ok : r.admissible) EXPECT_FALSE(ok);
  EXPECT_FALSE(rate_admissible(SignedSeq(1, {1.2, -0.2}), 5.0, 200));
  EXPECT_TRUE(rate_admissible(SignedSeq(1, {0.5, 0.5}), 0.1, 200));
}

TEST(Threshold, RequiresNormalizedAlpha) {
  try {
    min_lambda_threshold(SignedSeq(1, {1.0, 0.5}), std::vector<double>{1.0}, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.name(), "NotNormalized");
  }
}
