#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sidkit/signed_series.hpp"

namespace sidkit {

inline constexpr double kAdmissibilityTolerance = 1e-10;

/// Coefficients of G^{1/n} to `order`; n = 1 returns the input unchanged.
/// Requires offset 0 and P_0 > 0 (NonPositiveConstantTerm).
SignedSeq nth_root_pmf(const SignedSeq& pmf, int n, int order = kDefaultOrder);

/// total_variation(G^{r n}) for each n in n_list, each truncated at `order`.
std::vector<double> norm_growth(const SignedSeq& pmf, double r, std::span<const int> n_list, int order = kDefaultOrder);

/// Admissibility of G^r on a grid of exponents, "up to horizon H": r is
/// admissible iff every coefficient of G^r through degree H is >= -tol.
struct JorgensenReport {
  std::vector<double> grid;
  std::vector<bool> admissible;
  std::vector<double> min_coefficient;
  int horizon = 0;
  double tol = kAdmissibilityTolerance;
};

JorgensenReport jorgensen_probe(const SignedSeq& pmf, std::span<const double> r_grid, int horizon,
                                double tol = kAdmissibilityTolerance);

/// Smallest rate lambda such that the DPCP law with jump weights `alpha`
/// has P_n >= -tol for all n <= horizon. The smallest admissible grid point
/// is refined by 40 bisection steps against the grid point below it.
struct ThresholdResult {
  std::optional<double> threshold;
  /// (inadmissible, admissible) pair bounding the threshold after bisection.
  std::optional<std::pair<double, double>> bracket;
  std::vector<double> grid;
  std::vector<bool> admissible;
  int horizon = 0;
};

ThresholdResult min_lambda_threshold(const SignedSeq& alpha, std::span<const double> lambda_grid, int horizon,
                                     double tol = kAdmissibilityTolerance);

/// Whether the DPCP law exp{lambda sum alpha_k (z^k - 1)} has P_n >= -tol
/// for every n <= horizon.
bool rate_admissible(const SignedSeq& alpha, double lambda, int horizon, double tol = kAdmissibilityTolerance);

}  // namespace sidkit
