#include "sidkit/dpcp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "sidkit/error.hpp"
#include "sidkit/parallel.hpp"
#include "sidkit/polynomial.hpp"

namespace sidkit {

namespace {

using Complex = std::complex<double>;

std::string format_complex(Complex z) {
  std::ostringstream out;
  out.precision(12);
  out << z.real();
  if (z.imag() != 0.0) out << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

std::vector<double> compound_recursion(double p0, std::span<const double> rates, int n_max) {
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1, 0.0);
  p[0] = p0;
  const int m = static_cast<int>(rates.size());
  for (int n = 1; n <= n_max; ++n) {
    double acc = 0.0;
    for (int u = 1; u <= std::min(n, m); ++u) acc += u * rates[u - 1] * p[n - u];
    p[n] = acc / n;
  }
  return p;
}

// Sums prod_u rate_u^{k_u}/k_u! over multiplicities with sum_u u k_u == remaining,
// using parts no larger than `largest`.
double partition_sum(std::span<const double> rates, int remaining, int largest) {
  if (remaining == 0) return 1.0;
  if (largest == 0) return 0.0;
  const double rate = largest <= static_cast<int>(rates.size()) ? rates[largest - 1] : 0.0;
  double total = partition_sum(rates, remaining, largest - 1);
  if (rate == 0.0) return total;
  double factor = 1.0;
  for (int k = 1; k * largest <= remaining; ++k) {
    factor *= rate / k;
    total += factor * partition_sum(rates, remaining - k * largest, largest - 1);
  }
  return total;
}

void validate_pmf(const SignedSeq& pmf) {
  if (pmf.offset() < 0) throw errors::validation("InvalidPMF", "p.m.f. support must start at index >= 0");
  for (double c : pmf.coeffs()) {
    if (!std::isfinite(c) || c < -1e-14) throw errors::validation("InvalidPMF", "p.m.f. has a negative entry");
  }
  if (std::abs(pmf.sum() - 1.0) > 1e-6) throw errors::validation("InvalidPMF", "p.m.f. does not sum to 1");
}

std::vector<double> dense_from_zero(const SignedSeq& s) {
  std::vector<double> c(static_cast<std::size_t>(s.order()) + 1, 0.0);
  for (std::int64_t k = s.offset(); k <= s.order(); ++k) c[static_cast<std::size_t>(k)] = s.at(k);
  return c;
}

bool strictly_decreasing(const std::vector<double>& c) {
  if (c.back() <= 0.0) return false;
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (!(c[k - 1] > c[k])) return false;
  }
  return true;
}

}  // namespace

DpcpParams::DpcpParams(double lambda_, SignedSeq alpha_) : lambda(lambda_), alpha(std::move(alpha_)) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw errors::validation("InvalidArgument", "lambda must be positive");
  if (alpha.offset() != 1) throw errors::validation("InvalidArgument", "alpha must start at jump size 1");
}

std::vector<double> DpcpParams::rates() const {
  std::vector<double> r(static_cast<std::size_t>(alpha.order()), 0.0);
  for (std::int64_t k = 1; k <= alpha.order(); ++k) r[static_cast<std::size_t>(k - 1)] = lambda * alpha.at(k);
  return r;
}

std::string ClassificationReport::verdict_name() const {
  if (verdict == Verdict::Inconclusive) return "Inconclusive";
  const std::string base = family == Family::Dpcp ? "DPCP" : "IPCP";
  return verdict == Verdict::Yes ? base : "Not" + base;
}

SignedSeq pmf_from_rates(std::span<const double> rates, int n_max) {
  if (n_max < 0) throw errors::validation("InvalidArgument", "n_max must be >= 0");
  double total = 0.0;
  for (double r : rates) total += r;
  return SignedSeq(0, compound_recursion(std::exp(-total), rates, n_max), true);
}

SignedSeq pmf_from_params_recursive(const DpcpParams& p, int n_max) {
  if (n_max < 0) throw errors::validation("InvalidArgument", "n_max must be >= 0");
  const auto rates = p.rates();
  return SignedSeq(0, compound_recursion(std::exp(-p.lambda), rates, n_max), true);
}

SignedSeq pmf_from_params_explicit(const DpcpParams& p, int n_max) {
  if (n_max < 0) throw errors::validation("InvalidArgument", "n_max must be >= 0");
  if (n_max > kMaxExplicitOrder) {
    throw errors::validation("PartitionOverflow", "explicit partition sum is limited to n_max <= 40");
  }
  const auto rates = p.rates();
  const double p0 = std::exp(-p.lambda);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) out[n] = p0 * partition_sum(rates, n, n);
  return SignedSeq(0, std::move(out), true);
}

DpcpParams extract_dpcp_params(const SignedSeq& pmf, int order) {
  if (pmf.offset() < 0) throw errors::validation("InvalidArgument", "p.m.f. must start at index 0");
  if (pmf.offset() > 0 || !(pmf.at(0) > 0.0)) {
    throw errors::numerical("NonPositiveConstantTerm", "P0 must be positive to take the log of the p.g.f.");
  }
  if (!pmf.truncated() && std::abs(pmf.sum() - 1.0) > 1e-6) {
    throw errors::validation("NotNormalized", "exact p.m.f. does not sum to 1");
  }
  const PowerSeries log_series = series_log(PowerSeries::from_seq(pmf, order));
  if (log_series.order() < 1) throw errors::validation("InvalidArgument", "extraction needs order >= 1");
  const double lambda = -log_series[0];
  if (!(lambda > 0.0)) throw errors::numerical("DegenerateLaw", "P0 >= 1 leaves no positive rate");
  std::vector<double> alpha(static_cast<std::size_t>(log_series.order()));
  for (int k = 1; k <= log_series.order(); ++k) alpha[k - 1] = log_series[k] / lambda;
  return DpcpParams(lambda, SignedSeq(1, std::move(alpha), true));
}

DiskMinimum disk_minimum(std::span<const double> coeffs, int radii, int angles) {
  if (radii < 2 || angles < 1) throw errors::validation("InvalidArgument", "disk grid needs >= 2 radii and >= 1 angle");
  std::vector<DiskMinimum> per_radius(static_cast<std::size_t>(radii));
  parallel_for(per_radius.size(), [&](std::size_t i) {
    const double r = static_cast<double>(i) / (radii - 1);
    DiskMinimum best{std::numeric_limits<double>::infinity(), 0.0};
    for (int j = 0; j < angles; ++j) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / angles);
      const double m = std::abs(poly::evaluate(coeffs, z));
      if (m < best.modulus) best = {m, z};
      if (i == 0) break;  // r = 0 is a single point
    }
    per_radius[i] = best;
  });
  DiskMinimum best = per_radius.front();
  for (const auto& candidate : per_radius) {
    if (candidate.modulus < best.modulus) best = candidate;
  }
  return best;
}

ClassificationReport classify_dpcp(const SignedSeq& pmf, const ClassifyOptions& options) {
  validate_pmf(pmf);
  ClassificationReport report;
  report.family = Family::Dpcp;

  if (pmf.offset() > 0) {
    report.verdict = Verdict::No;
    report.zero = Complex(0.0, 0.0);
    report.min_modulus = 0.0;
    report.witness = "P0 = 0, so G(0) = 0";
    return report;
  }

  const SignedSeq seq = pmf.canonical();
  const std::vector<double> c = dense_from_zero(seq);
  const DiskMinimum grid = disk_minimum(c, options.radii, options.angles);
  report.min_modulus = grid.modulus;

  if (c[0] > 0.5) {
    report.verdict = Verdict::Yes;
    report.witness = "P0 > 0.5, so |G(z)| >= 2 P0 - 1 > 0 on the closed disk";
    return report;
  }
  if (!seq.truncated() && strictly_decreasing(c)) {
    report.verdict = Verdict::Yes;
    report.witness = "strictly decreasing masses, so G has no zero in the closed disk";
    return report;
  }

  if (!seq.truncated()) {
    const auto zs = poly::roots(c);
    std::optional<Complex> inside;
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& z : zs) {
      nearest = std::min(nearest, std::abs(z));
      if (std::abs(z) <= 1.0 + options.root_tolerance && (!inside || std::abs(z) < std::abs(*inside))) inside = z;
    }
    if (inside) {
      report.verdict = Verdict::No;
      report.zero = *inside;
      report.min_modulus = std::abs(poly::evaluate(c, *inside));
      report.witness = "p.g.f. zero at z = " + format_complex(*inside);
    } else {
      report.verdict = Verdict::Yes;
      std::ostringstream out;
      out << "all " << zs.size() << " p.g.f. roots lie outside the closed unit disk (nearest |z| = " << nearest << ")";
      report.witness = out.str();
    }
    return report;
  }

  const double tail = std::max(std::abs(1.0 - seq.sum()), seq.tail_indicator());
  if (grid.modulus < options.grid_zero_tolerance) {
    report.verdict = Verdict::No;
    report.zero = grid.at;
    report.witness = "approximate p.g.f. zero near z = " + format_complex(grid.at) + " on the disk grid";
  } else if (grid.modulus > options.grid_safe_modulus && tail <= options.tail_tolerance) {
    report.verdict = Verdict::Yes;
    std::ostringstream out;
    out << "heuristic: min |G| = " << grid.modulus << " on the disk grid with truncation tail " << tail;
    report.witness = out.str();
  } else {
    report.verdict = Verdict::Inconclusive;
    std::ostringstream out;
    out << "min |G| = " << grid.modulus << " with truncation tail " << tail << " at order " << seq.order();
    report.witness = out.str();
  }
  return report;
}

ValidityReport finite_order_validity(const SignedSeq& a, double lambda_scale, const ValidityOptions& options) {
  if (a.offset() < 1) throw errors::validation("InvalidArgument", "exponent coefficients start at k = 1");
  if (!(lambda_scale > 0.0)) throw errors::validation("InvalidArgument", "lambda_scale must be positive");
  if (options.horizon < 0) throw errors::validation("InvalidArgument", "horizon must be >= 0");

  ValidityReport report;
  const int m = static_cast<int>(a.order());
  report.order = m;
  report.first_positive = a.at(1) > 0.0;
  report.penultimate_positive = m < 2 || a.at(m - 1) > 0.0;
  report.last_positive = a.at(m) > 0.0;

  if (options.van_harn) {
    if (m != 4) throw errors::validation("WrongOrder", "van Harn inequalities apply to order 4 only");
    VanHarnCheck vh{};
    vh.a = lambda_scale * a.at(1);
    vh.b = -lambda_scale * a.at(2);
    vh.c = lambda_scale * a.at(3);
    vh.d = lambda_scale * a.at(4);
    vh.all_positive = vh.a > 0 && vh.b > 0 && vh.c > 0 && vh.d > 0;
    vh.bound = vh.all_positive
                   ? std::min({vh.a * vh.a / 3.0, vh.c / vh.a, vh.a * vh.d / (2.0 * vh.c), vh.c * vh.c / (3.0 * vh.d)})
                   : std::numeric_limits<double>::quiet_NaN();
    vh.satisfied = vh.all_positive && vh.b <= vh.bound;
    report.van_harn = vh;
  }

  std::vector<double> rates(static_cast<std::size_t>(m), 0.0);
  for (int k = 1; k <= m; ++k) rates[k - 1] = lambda_scale * a.at(k);
  const SignedSeq p = pmf_from_rates(rates, options.horizon);
  report.horizon = options.horizon;
  report.min_mass = *std::min_element(p.coeffs().begin(), p.coeffs().end());
  for (int n = 0; n <= options.horizon; ++n) {
    if (p.at(n) < -1e-10) {
      report.first_negative = n;
      break;
    }
  }
  return report;
}

}  // namespace sidkit
