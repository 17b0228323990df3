#pragma once

#include <vector>

#include "sidkit/signed_series.hpp"

namespace sidkit {

/// Argument of the one-parameter Mittag-Leffler function
///   E_nu(x) = sum_{m>=0} x^m / Gamma(nu m + 1),   0 < nu <= 1.
struct MLQuery {
  double nu;
  double x;

  /// DomainError unless 0 < nu <= 1 and x is finite.
  MLQuery(double nu, double x);
};

enum class Precision {
  Full,
  /// Error estimate above 1e-10 relative; the value is still returned.
  Reduced,
  /// E_nu(x) exceeds the double range; `value` is +inf, `log_value` finite.
  Overflow,
};

enum class MLMethod { Exponential, Series, LogSeries, Integral };

struct MittagLefflerValue {
  double value = 0.0;
  double log_value = 0.0;
  Precision precision = Precision::Full;
  MLMethod method = MLMethod::Series;
  double error_estimate = 0.0;
};

/// nu = 1 is exp(x). x >= 0 sums the positive series in log space. x < 0
/// sums the series directly while its largest term stays below 10 and
/// otherwise integrates the positive representation
///   E_nu(-y) = 1/(pi nu) int_{pi/2 - nu pi}^{pi/2} exp(-(u(t) y)^{1/nu}) dt,
///   u(t) = sin(nu pi) tan t - cos(nu pi).
MittagLefflerValue mittag_leffler(const MLQuery& q);

/// P_n = [z^n] E_nu(lambda t^nu (z - 1)), n <= n_max, by Horner composition of
/// the Mittag-Leffler series with the shifted series lambda t^nu (z - 1).
/// Throws ReducedPrecision when cancellation in the composition could exceed
/// 1e-10 absolute (large lambda t^nu for small nu).
SignedSeq fractional_poisson_pmf(double lambda, double t, double nu, int n_max);

struct MixingAtom {
  double rate;
  double weight;
};

/// Finite atomic mixing law; rates and weights positive, weights summing to 1
/// within 1e-10.
class MixingLaw {
 public:
  explicit MixingLaw(std::vector<MixingAtom> atoms);
  const std::vector<MixingAtom>& atoms() const noexcept { return atoms_; }
  /// sum_i w_i exp(lambda_i (z - 1)) at a real z.
  double pgf(double z) const noexcept;

 private:
  std::vector<MixingAtom> atoms_;
};

/// P_n = sum_i w_i lambda_i^n e^{-lambda_i} / n!.
SignedSeq mixed_poisson_pmf(const MixingLaw& mix, int n_max);

}  // namespace sidkit
