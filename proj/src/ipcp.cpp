#include "sidkit/ipcp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sidkit/error.hpp"
#include "sidkit/polynomial.hpp"

namespace sidkit {

namespace {

using Complex = std::complex<double>;

constexpr double kVanishingModulus = 1e-6;
constexpr double kMaxIncrement = 0.75 * std::numbers::pi;

bool is_power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

std::vector<Complex> unit_roots(int M) {
  std::vector<Complex> w(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) w[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / M);
  return w;
}

std::size_t wrap(std::int64_t k, int M) {
  const std::int64_t r = k % M;
  return static_cast<std::size_t>(r < 0 ? r + M : r);
}

double min_modulus(const CharFnGrid& grid) {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex& v : grid.values) m = std::min(m, std::abs(v));
  return m;
}

// Circle samples of sum_k P_k z^{k - offset}; |z^offset| = 1 so the offset
// does not change the modulus.
double circle_minimum(const std::vector<double>& c, int M, Complex* where) {
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < M; ++j) {
    const Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / M);
    const double m = std::abs(poly::evaluate(c, z));
    if (m < best) {
      best = m;
      if (where) *where = z;
    }
  }
  return best;
}

std::string format_unit(Complex z) {
  std::ostringstream out;
  out.precision(12);
  out << "e^{i " << std::arg(z) << "}";
  return out.str();
}

}  // namespace

SignedSeq IpcpParams::alpha() const {
  const std::size_t neg = negative.size();
  std::vector<double> c(neg + 1 + positive.size(), 0.0);
  for (std::size_t k = 1; k <= neg; ++k) c[neg - k] = negative[k - 1];
  for (std::size_t k = 1; k <= positive.size(); ++k) c[neg + k] = positive[k - 1];
  return SignedSeq(-static_cast<std::int64_t>(neg), std::move(c), true);
}

IpcpParams IpcpParams::from_alpha(double lambda, const SignedSeq& alpha, std::int64_t drift) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw errors::validation("InvalidArgument", "lambda must be positive");
  IpcpParams p;
  p.lambda = lambda;
  p.drift = drift;
  for (std::int64_t k = 1; k <= alpha.order(); ++k) p.positive.push_back(alpha.at(k));
  for (std::int64_t k = 1; -k >= alpha.offset(); ++k) p.negative.push_back(alpha.at(-k));
  return p;
}

double IpcpParams::alpha_sum() const noexcept {
  return std::accumulate(positive.begin(), positive.end(), 0.0) +
         std::accumulate(negative.begin(), negative.end(), 0.0);
}

Complex IpcpParams::exponent(double theta) const noexcept {
  Complex acc = 0.0;
  for (std::size_t k = 1; k <= positive.size(); ++k) {
    acc += positive[k - 1] * (std::polar(1.0, static_cast<double>(k) * theta) - 1.0);
  }
  for (std::size_t k = 1; k <= negative.size(); ++k) {
    acc += negative[k - 1] * (std::polar(1.0, -static_cast<double>(k) * theta) - 1.0);
  }
  return lambda * acc;
}

Complex IpcpParams::charfn(double theta) const noexcept {
  return std::polar(1.0, static_cast<double>(drift) * theta) * std::exp(exponent(theta));
}

double CharFnGrid::theta(int j) const noexcept { return 2.0 * std::numbers::pi * j / size(); }

CharFnGrid charfn_grid(const SignedSeq& pmf, int M) {
  if (!is_power_of_two(M)) throw errors::validation("InvalidArgument", "grid size must be a power of two");
  if (static_cast<std::size_t>(M) < 2 * pmf.size()) {
    throw errors::validation("GridTooCoarse", "grid size must be at least twice the support width");
  }
  const auto w = unit_roots(M);
  CharFnGrid grid;
  grid.values.assign(static_cast<std::size_t>(M), Complex(0.0, 0.0));
  for (int j = 0; j < M; ++j) {
    Complex acc = 0.0;
    for (std::int64_t k = pmf.offset(); k <= pmf.order(); ++k) acc += pmf.at(k) * w[wrap(k * j, M)];
    grid.values[j] = acc;
  }
  return grid;
}

Complex LogFourierCoefficients::at(std::int64_t n) const noexcept {
  if (n < -max_index || n > max_index) return 0.0;
  return values[static_cast<std::size_t>(n + max_index)];
}

std::int64_t winding_number(const CharFnGrid& grid) {
  const int M = grid.size();
  if (M < 4) throw errors::validation("InvalidArgument", "grid too small");
  if (min_modulus(grid) <= kVanishingModulus) {
    throw errors::numerical("VanishingCharFn", "characteristic function vanishes on the grid (min |phi| <= 1e-6)");
  }
  double total = 0.0;
  for (int j = 0; j < M; ++j) {
    const double step = std::arg(grid.values[(j + 1) % M] / grid.values[j]);
    if (std::abs(step) > kMaxIncrement) {
      throw errors::numerical("BranchFailure", "argument turns too fast between adjacent grid points");
    }
    total += step;
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-9) {
    throw errors::numerical("BranchFailure", "accumulated argument is not a whole number of turns");
  }
  return static_cast<std::int64_t>(rounded);
}

LogFourierCoefficients log_fourier_coefficients(const CharFnGrid& grid, LogBranch branch, int max_index) {
  const int M = grid.size();
  if (max_index < 0) max_index = M / 4;
  if (max_index >= M / 2) throw errors::validation("InvalidArgument", "max_index must be below M / 2");

  LogFourierCoefficients out;
  out.branch = branch;
  out.max_index = max_index;
  std::vector<Complex> logs(static_cast<std::size_t>(M));

  if (branch == LogBranch::Factored) {
    out.winding = winding_number(grid);
    std::vector<Complex> residual(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
      residual[j] = grid.values[j] * std::polar(1.0, -static_cast<double>(out.winding) * grid.theta(j));
    }
    double angle = std::arg(residual[0]);
    for (int j = 0; j < M; ++j) {
      if (j > 0) angle += std::arg(residual[j] / residual[j - 1]);
      logs[j] = Complex(std::log(std::abs(residual[j])), angle);
    }
  } else {
    if (min_modulus(grid) <= kVanishingModulus) {
      throw errors::numerical("VanishingCharFn", "characteristic function vanishes on the grid (min |phi| <= 1e-6)");
    }
    for (int j = 0; j < M; ++j) {
      const Complex v = grid.values[j];
      Complex l = std::log(v);
      if (v.real() < 0.0 && std::abs(v.imag()) <= 1e-14 * std::abs(v)) l = Complex(l.real(), 0.0);
      logs[j] = l;
    }
  }

  const auto w = unit_roots(M);
  out.values.assign(static_cast<std::size_t>(2 * max_index + 1), Complex(0.0, 0.0));
  for (int n = -max_index; n <= max_index; ++n) {
    Complex acc = 0.0;
    for (int j = 0; j < M; ++j) acc += logs[j] * std::conj(w[wrap(static_cast<std::int64_t>(n) * j, M)]);
    out.values[static_cast<std::size_t>(n + max_index)] = acc / static_cast<double>(M);
  }
  return out;
}

IpcpParams extract_ipcp_params(const CharFnGrid& grid) {
  const auto c = log_fourier_coefficients(grid, LogBranch::Factored);
  const double lambda = -c.at(0).real();
  if (!(lambda > 1e-14)) {
    throw errors::numerical("DegenerateLaw", "extracted rate is not positive (point mass or unnormalized input)");
  }
  IpcpParams p;
  p.lambda = lambda;
  p.drift = c.winding;
  p.positive.resize(static_cast<std::size_t>(c.max_index));
  p.negative.resize(static_cast<std::size_t>(c.max_index));
  for (int k = 1; k <= c.max_index; ++k) {
    p.positive[k - 1] = c.at(k).real() / lambda;
    p.negative[k - 1] = c.at(-k).real() / lambda;
  }
  return p;
}

double reconstruction_error(const CharFnGrid& grid, const IpcpParams& params) {
  double worst = 0.0;
  for (int j = 0; j < grid.size(); ++j) worst = std::max(worst, std::abs(grid.values[j] - params.charfn(grid.theta(j))));
  return worst;
}

ClassificationReport classify_ipcp(const SignedSeq& pmf, int M, const ClassifyOptions& options) {
  if (!is_power_of_two(M)) throw errors::validation("InvalidArgument", "grid size must be a power of two");
  for (double v : pmf.coeffs()) {
    if (!std::isfinite(v) || v < -1e-14) throw errors::validation("InvalidPMF", "p.m.f. has a negative entry");
  }
  if (std::abs(pmf.sum() - 1.0) > 1e-6) throw errors::validation("InvalidPMF", "p.m.f. does not sum to 1");

  const SignedSeq seq = pmf.canonical();
  const std::vector<double>& c = seq.coeffs();
  ClassificationReport report;
  report.family = Family::Ipcp;
  Complex where{1.0, 0.0};
  report.min_modulus = circle_minimum(c, M, &where);

  if (!seq.truncated()) {
    const auto zs = poly::roots(c);
    std::optional<Complex> on_circle;
    double nearest = std::numeric_limits<double>::infinity();
    for (const Complex& z : zs) {
      const double gap = std::abs(std::abs(z) - 1.0);
      nearest = std::min(nearest, gap);
      if (gap <= options.root_tolerance && !on_circle) on_circle = z;
    }
    if (on_circle) {
      report.verdict = Verdict::No;
      report.zero = *on_circle;
      report.min_modulus = std::abs(poly::evaluate(c, *on_circle));
      report.witness = "characteristic function zero at theta with e^{i theta} = " + format_unit(*on_circle);
    } else {
      report.verdict = Verdict::Yes;
      std::ostringstream out;
      out << "no polynomial root on the unit circle (nearest ||z| - 1| = " << nearest << ")";
      report.witness = out.str();
    }
  } else {
    const double tail = std::max(std::abs(1.0 - seq.sum()), seq.tail_indicator());
    if (report.min_modulus < options.grid_zero_tolerance) {
      report.verdict = Verdict::No;
      report.zero = where;
      report.witness = "approximate zero of phi near " + format_unit(where);
    } else if (report.min_modulus > options.grid_safe_modulus && tail <= options.tail_tolerance) {
      report.verdict = Verdict::Yes;
      std::ostringstream out;
      out << "heuristic: min |phi| = " << report.min_modulus << " on " << M << " angles with truncation tail " << tail;
      report.witness = out.str();
    } else {
      report.verdict = Verdict::Inconclusive;
      std::ostringstream out;
      out << "min |phi| = " << report.min_modulus << " with truncation tail " << tail;
      report.witness = out.str();
    }
  }

  if (report.verdict == Verdict::Yes && seq.offset() >= 0) {
    report.contrast = classify_dpcp(seq, options).verdict == Verdict::No;
  }
  return report;
}

IpcpPmf ipcp_pmf(const IpcpParams& params, std::int64_t lo, std::int64_t hi, int extra_terms) {
  if (lo > hi) throw errors::validation("InvalidArgument", "window must satisfy lo <= hi");
  if (extra_terms < 0) throw errors::validation("InvalidArgument", "extra_terms must be >= 0");

  IpcpPmf out{SignedSeq::delta(0)};
  std::vector<double> plus_rates(params.positive.size());
  std::vector<double> minus_rates(params.negative.size());
  for (std::size_t k = 0; k < plus_rates.size(); ++k) plus_rates[k] = params.lambda * params.positive[k];
  for (std::size_t k = 0; k < minus_rates.size(); ++k) minus_rates[k] = params.lambda * params.negative[k];
  out.lambda_plus = std::accumulate(plus_rates.begin(), plus_rates.end(), 0.0);
  out.lambda_minus = std::accumulate(minus_rates.begin(), minus_rates.end(), 0.0);
  out.negative_side_rate = out.lambda_plus < 0.0 || out.lambda_minus < 0.0;

  const std::int64_t n = std::max(std::abs(lo), std::abs(hi)) + std::abs(params.drift) + extra_terms;
  // An empty side has all rates zero and collapses to a point mass at 0.
  const SignedSeq plus = pmf_from_rates(plus_rates, static_cast<int>(n));
  const SignedSeq minus = pmf_from_rates(minus_rates, static_cast<int>(n));

  std::vector<double> window(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (std::int64_t k = lo; k <= hi; ++k) {
    double acc = 0.0;
    for (std::int64_t b = 0; b <= n; ++b) {
      const std::int64_t a = k - params.drift + b;
      if (a < 0) continue;
      if (a > n) break;
      acc += plus.at(a) * minus.at(b);
    }
    window[static_cast<std::size_t>(k - lo)] = acc;
  }
  out.window_mass = std::accumulate(window.begin(), window.end(), 0.0);
  out.pmf = SignedSeq(lo, std::move(window), true);
  return out;
}

std::vector<PoissonComponent> weighted_signed_poisson_components(const IpcpParams& params) {
  std::vector<PoissonComponent> out;
  for (std::size_t k = params.negative.size(); k >= 1; --k) {
    if (params.negative[k - 1] != 0.0) out.push_back({-static_cast<std::int64_t>(k), params.lambda * params.negative[k - 1]});
  }
  for (std::size_t k = 1; k <= params.positive.size(); ++k) {
    if (params.positive[k - 1] != 0.0) out.push_back({static_cast<std::int64_t>(k), params.lambda * params.positive[k - 1]});
  }
  return out;
}

Complex component_exponent(const std::vector<PoissonComponent>& components, double theta) noexcept {
  Complex acc = 0.0;
  for (const auto& c : components) acc += c.rate * (std::polar(1.0, static_cast<double>(c.jump) * theta) - 1.0);
  return acc;
}

Complex compound_poisson_charfn(const IpcpParams& params, double theta) noexcept {
  Complex jump_cf = 0.0;
  for (std::size_t k = 1; k <= params.positive.size(); ++k) {
    jump_cf += params.positive[k - 1] * std::polar(1.0, static_cast<double>(k) * theta);
  }
  for (std::size_t k = 1; k <= params.negative.size(); ++k) {
    jump_cf += params.negative[k - 1] * std::polar(1.0, -static_cast<double>(k) * theta);
  }
  return std::polar(1.0, static_cast<double>(params.drift) * theta) * std::exp(params.lambda * (jump_cf - 1.0));
}

}  // namespace sidkit
