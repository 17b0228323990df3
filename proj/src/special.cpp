#include "sidkit/special.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "sidkit/error.hpp"

namespace sidkit {

namespace {

constexpr double kLogMax = 709.78;  // log(DBL_MAX)
constexpr double kDirectSeriesMaxTerm = 10.0;
constexpr double kReducedThreshold = 1e-10;
constexpr int kMaxCompositionTerms = 1 << 20;
constexpr long double kTruncationFloor = 1e-20L;

double log_term(double log_x, double nu, double m) { return m * log_x - std::lgamma(nu * m + 1.0); }

MittagLefflerValue from_log(double log_value, MLMethod method, double relative_error) {
  MittagLefflerValue out;
  out.method = method;
  out.log_value = log_value;
  out.error_estimate = relative_error;
  if (log_value > kLogMax) {
    out.value = std::numeric_limits<double>::infinity();
    out.precision = Precision::Overflow;
  } else {
    out.value = std::exp(log_value);
    out.precision = relative_error > kReducedThreshold ? Precision::Reduced : Precision::Full;
  }
  return out;
}

// All terms positive: log-sum-exp over m until the (log-concave) terms have
// passed their peak and dropped 40 nats below it.
MittagLefflerValue positive_series(double nu, double x) {
  const double log_x = std::log(x);
  // E_nu(x) = exp(x^{1/nu}) / nu up to exponentially small terms once
  // x^{1/nu} is large, so values past the double range skip the series.
  const double asymptotic_log = std::exp(log_x / nu) - std::log(nu);
  if (asymptotic_log > kLogMax + 10.0) {
    MittagLefflerValue out;
    out.method = MLMethod::LogSeries;
    out.log_value = asymptotic_log;
    out.value = std::numeric_limits<double>::infinity();
    out.precision = Precision::Overflow;
    return out;
  }
  std::vector<double> logs;
  double peak = -std::numeric_limits<double>::infinity();
  for (int m = 0;; ++m) {
    const double lt = log_term(log_x, nu, m);
    logs.push_back(lt);
    peak = std::max(peak, lt);
    if (m > 0 && lt < logs[m - 1] && lt < peak - 40.0) break;
  }
  double scaled = 0.0;
  for (double lt : logs) scaled += std::exp(lt - peak);
  const double relative_error = std::numeric_limits<double>::epsilon() * (std::abs(peak) + static_cast<double>(logs.size()));
  return from_log(peak + std::log(scaled), MLMethod::LogSeries, relative_error);
}

// The terms are log-concave in m with their peak near nu m + 1/2 = y^{1/nu}.
double largest_log_term(double log_y, double nu) {
  const double scale = std::exp(log_y / nu);
  if (scale > 1e6) return std::numeric_limits<double>::infinity();
  const double centre = std::max(0.0, std::round((scale - 0.5) / nu));
  double peak = 0.0;  // m = 0 term
  for (double m = std::max(0.0, centre - 3.0); m <= centre + 3.0; m += 1.0) {
    peak = std::max(peak, log_term(log_y, nu, m));
  }
  return peak;
}

MittagLefflerValue alternating_series(double nu, double y, double log_peak) {
  const double log_y = std::log(y);
  double sum = 1.0;
  int terms = 1;
  for (int m = 1;; ++m, ++terms) {
    const double lt = log_term(log_y, nu, m);
    const double term = (m % 2 == 0 ? 1.0 : -1.0) * std::exp(lt);
    sum += term;
    if (lt < log_peak && std::abs(term) < 1e-18) break;
  }
  const double absolute = std::numeric_limits<double>::epsilon() * std::exp(log_peak) * std::sqrt(static_cast<double>(terms));
  const double relative = sum > 0.0 ? absolute / sum : std::numeric_limits<double>::infinity();
  MittagLefflerValue out = from_log(std::log(std::max(sum, std::numeric_limits<double>::min())), MLMethod::Series, relative);
  out.value = sum;
  return out;
}

// With v = u(t) y the representation becomes
//   E_nu(-y) = 1/(pi nu) int_0^inf exp(-v^{1/nu}) s y / (s^2 y^2 + (v + c y)^2) dv,
// s = sin(nu pi), c = cos(nu pi); split at v = 1 where exp(-v^{1/nu}) turns.
MittagLefflerValue negative_integral(double nu, double y) {
  const double s = std::sin(nu * std::numbers::pi);
  const double c = std::cos(nu * std::numbers::pi);
  auto integrand = [=](double v) {
    const double shifted = v + c * y;
    return std::exp(-std::pow(v, 1.0 / nu)) * s * y / (s * s * y * y + shifted * shifted);
  };
  const double cutoff = std::pow(750.0, nu);  // exp(-v^{1/nu}) underflows past here
  boost::math::quadrature::tanh_sinh<double> integrator;
  double integral = 0.0;
  double error = 0.0;
  for (auto [lo, hi] : {std::pair{0.0, 1.0}, std::pair{1.0, cutoff}}) {
    double piece_error = 0.0;
    integral += integrator.integrate(integrand, lo, hi, 1e-14, &piece_error);
    error += piece_error;
  }
  const double value = integral / (std::numbers::pi * nu);
  const double relative = integral > 0.0 ? error / integral : std::numeric_limits<double>::infinity();
  MittagLefflerValue out = from_log(std::log(value), MLMethod::Integral, relative);
  out.value = value;
  return out;
}

}  // namespace

MLQuery::MLQuery(double nu_, double x_) : nu(nu_), x(x_) {
  if (!(nu > 0.0 && nu <= 1.0)) throw errors::validation("DomainError", "nu must lie in (0, 1]");
  if (!std::isfinite(x)) throw errors::validation("DomainError", "x must be finite");
}

MittagLefflerValue mittag_leffler(const MLQuery& q) {
  if (q.x == 0.0) return from_log(0.0, MLMethod::Series, 0.0);
  if (q.nu == 1.0) {
    MittagLefflerValue out = from_log(q.x, MLMethod::Exponential, 0.0);
    if (out.precision != Precision::Overflow) out.value = std::exp(q.x);
    return out;
  }
  if (q.x > 0.0) return positive_series(q.nu, q.x);

  const double y = -q.x;
  const double log_peak = largest_log_term(std::log(y), q.nu);
  if (log_peak <= std::log(kDirectSeriesMaxTerm)) return alternating_series(q.nu, y, log_peak);
  return negative_integral(q.nu, y);
}

SignedSeq fractional_poisson_pmf(double lambda, double t, double nu, int n_max) {
  if (!(lambda > 0.0) || !(t > 0.0)) throw errors::validation("DomainError", "lambda and t must be positive");
  if (!(nu > 0.0 && nu <= 1.0)) throw errors::validation("DomainError", "nu must lie in (0, 1]");
  if (n_max < 0) throw errors::validation("InvalidArgument", "n_max must be >= 0");

  using Real = long double;
  const Real c = static_cast<Real>(lambda) * std::pow(static_cast<Real>(t), static_cast<Real>(nu));
  const Real log_c = std::log(c);
  const Real log_2c = std::log(2 * c);
  const Real budget = 1e-10L / (8 * std::numeric_limits<Real>::epsilon());
  auto refuse = [] {
    throw errors::numerical("ReducedPrecision",
                            "lambda t^nu too large for the series composition at this nu (cancellation > 1e-10)");
  };

  // Coefficients 1/Gamma(nu m + 1) until a_m (2c)^m, which bounds the term's
  // contribution to every P_n, is negligible.
  std::vector<Real> log_a;
  Real amplification_zero = 0;
  for (int m = 0;; ++m) {
    const Real la = -std::lgamma(static_cast<Real>(nu) * m + 1);
    log_a.push_back(la);
    amplification_zero += std::exp(la + m * log_c);
    if (amplification_zero > budget || m > kMaxCompositionTerms) refuse();
    if (m >= n_max && m > 0 && la + m * log_2c < std::log(1e-22L)) break;
  }

  // Cancellation in P_n is governed by sum_m a_m c^m C(m, n).
  std::vector<Real> amplification(static_cast<std::size_t>(n_max) + 1, 0);
  for (int m = 0; m < static_cast<int>(log_a.size()); ++m) {
    const Real base = log_a[m] + m * log_c + std::lgamma(static_cast<Real>(m) + 1);
    for (int n = 0; n <= std::min(m, n_max); ++n) {
      amplification[n] += std::exp(base - std::lgamma(static_cast<Real>(n) + 1) - std::lgamma(static_cast<Real>(m - n) + 1));
    }
  }
  if (*std::max_element(amplification.begin(), amplification.end()) > budget) refuse();

  // Horner: r <- r * c (z - 1) + a_m, truncated at degree n_max.
  std::vector<Real> r(static_cast<std::size_t>(n_max) + 1, 0);
  r[0] = std::exp(log_a.back());
  for (int m = static_cast<int>(log_a.size()) - 2; m >= 0; --m) {
    for (int k = n_max; k >= 1; --k) r[k] = c * (r[k - 1] - r[k]);
    r[0] = -c * r[0] + std::exp(log_a[m]);
  }

  std::vector<double> out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    Real v = r[k];
    if (v < 0 && v > -(amplification[k] * 8 * std::numeric_limits<Real>::epsilon() + kTruncationFloor)) v = 0;
    out[k] = static_cast<double>(v);
  }
  return SignedSeq(0, std::move(out), true);
}

MixingLaw::MixingLaw(std::vector<MixingAtom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw errors::validation("InvalidArgument", "mixing law needs at least one atom");
  double total = 0.0;
  for (const auto& atom : atoms_) {
    if (!(atom.rate > 0.0) || !(atom.weight > 0.0)) {
      throw errors::validation("InvalidArgument", "mixing atoms need positive rate and weight");
    }
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > 1e-10) throw errors::validation("NotNormalized", "mixing weights must sum to 1");
}

double MixingLaw::pgf(double z) const noexcept {
  double acc = 0.0;
  for (const auto& atom : atoms_) acc += atom.weight * std::exp(atom.rate * (z - 1.0));
  return acc;
}

SignedSeq mixed_poisson_pmf(const MixingLaw& mix, int n_max) {
  if (n_max < 0) throw errors::validation("InvalidArgument", "n_max must be >= 0");
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    double acc = 0.0;
    for (const auto& atom : mix.atoms()) {
      acc += atom.weight * std::exp(n * std::log(atom.rate) - atom.rate - std::lgamma(n + 1.0));
    }
    p[n] = acc;
  }
  return SignedSeq(0, std::move(p), true);
}

}  // namespace sidkit
