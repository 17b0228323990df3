#include "sidkit/divisibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sidkit/dpcp.hpp"
#include "sidkit/error.hpp"
#include "sidkit/parallel.hpp"

namespace sidkit {

namespace {

constexpr int kBisectionSteps = 40;

PowerSeries positive_constant_series(const SignedSeq& pmf, int order) {
  if (pmf.offset() != 0 || !(pmf.at(0) > 0.0)) {
    throw errors::numerical("NonPositiveConstantTerm", "P0 must be positive");
  }
  return PowerSeries::from_seq(pmf, order);
}

}  // namespace

SignedSeq nth_root_pmf(const SignedSeq& pmf, int n, int order) {
  if (n < 1) throw errors::validation("InvalidArgument", "root index n must be >= 1");
  const PowerSeries g = positive_constant_series(pmf, order);
  if (n == 1) return pmf;
  return series_pow(g, 1.0 / n).to_seq();
}

std::vector<double> norm_growth(const SignedSeq& pmf, double r, std::span<const int> n_list, int order) {
  const PowerSeries g = positive_constant_series(pmf, order);
  std::vector<double> out;
  out.reserve(n_list.size());
  for (int n : n_list) out.push_back(total_variation(series_pow(g, r * n).to_seq()));
  return out;
}

JorgensenReport jorgensen_probe(const SignedSeq& pmf, std::span<const double> r_grid, int horizon, double tol) {
  if (horizon < 0) throw errors::validation("InvalidArgument", "horizon must be >= 0");
  for (double r : r_grid) {
    if (!(r > 0.0)) throw errors::validation("InvalidArgument", "probe exponents must be positive");
  }
  const PowerSeries g = positive_constant_series(pmf, horizon);

  JorgensenReport report;
  report.grid.assign(r_grid.begin(), r_grid.end());
  report.horizon = horizon;
  report.tol = tol;
  report.min_coefficient.assign(r_grid.size(), 0.0);
  parallel_for(r_grid.size(), [&](std::size_t i) {
    const auto c = series_pow(g, r_grid[i]).coeffs();
    report.min_coefficient[i] = *std::min_element(c.begin(), c.end());
  });
  report.admissible.reserve(r_grid.size());
  for (double m : report.min_coefficient) report.admissible.push_back(m >= -tol);
  return report;
}

bool rate_admissible(const SignedSeq& alpha, double lambda, int horizon, double tol) {
  std::vector<double> rates(static_cast<std::size_t>(alpha.order()), 0.0);
  for (std::int64_t k = 1; k <= alpha.order(); ++k) rates[static_cast<std::size_t>(k - 1)] = lambda * alpha.at(k);
  const SignedSeq p = pmf_from_rates(rates, horizon);
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [tol](double v) { return v >= -tol; });
}

ThresholdResult min_lambda_threshold(const SignedSeq& alpha, std::span<const double> lambda_grid, int horizon,
                                     double tol) {
  if (alpha.offset() < 1) throw errors::validation("InvalidArgument", "alpha must start at jump size 1");
  if (std::abs(alpha.sum() - 1.0) > 1e-6) throw errors::validation("NotNormalized", "alpha must sum to 1");
  if (horizon < 0) throw errors::validation("InvalidArgument", "horizon must be >= 0");
  for (double l : lambda_grid) {
    if (!(l > 0.0)) throw errors::validation("InvalidArgument", "lambda grid must be positive");
  }

  ThresholdResult result;
  result.horizon = horizon;
  result.grid.assign(lambda_grid.begin(), lambda_grid.end());
  std::sort(result.grid.begin(), result.grid.end());
  result.grid.erase(std::unique(result.grid.begin(), result.grid.end()), result.grid.end());

  std::vector<char> flags(result.grid.size(), 0);
  parallel_for(result.grid.size(), [&](std::size_t i) { flags[i] = rate_admissible(alpha, result.grid[i], horizon, tol); });
  result.admissible.assign(flags.begin(), flags.end());

  const auto first = std::find(result.admissible.begin(), result.admissible.end(), true);
  if (first == result.admissible.end()) return result;
  const auto index = static_cast<std::size_t>(first - result.admissible.begin());
  if (index == 0) {
    result.threshold = result.grid.front();
    return result;
  }

  double lo = result.grid[index - 1];
  double hi = result.grid[index];
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (rate_admissible(alpha, mid, horizon, tol)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.threshold = hi;
  result.bracket = std::make_pair(lo, hi);
  return result;
}

}  // namespace sidkit
