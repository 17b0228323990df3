#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sidkit/dpcp.hpp"
#include "sidkit/signed_series.hpp"

namespace sidkit {

inline constexpr int kDefaultGridSize = 1024;

/// Integer-valued pseudo compound Poisson parameters with an integer drift:
///   phi(theta) = e^{i drift theta} exp{ lambda sum_{k != 0} alpha_k (e^{ik theta} - 1) }
/// `positive[k-1]` holds alpha_k and `negative[k-1]` holds alpha_{-k}.
struct IpcpParams {
  double lambda = 0.0;
  std::vector<double> positive;
  std::vector<double> negative;
  std::int64_t drift = 0;

  /// Two-sided alpha as a sequence with alpha_0 = 0.
  SignedSeq alpha() const;
  static IpcpParams from_alpha(double lambda, const SignedSeq& alpha, std::int64_t drift);
  double alpha_sum() const noexcept;
  /// lambda * sum_{k != 0} alpha_k (e^{ik theta} - 1).
  std::complex<double> exponent(double theta) const noexcept;
  /// Characteristic function including the drift factor.
  std::complex<double> charfn(double theta) const noexcept;
};

/// phi(theta_j) = sum_k P_k e^{ik theta_j} at theta_j = 2 pi j / M.
struct CharFnGrid {
  std::vector<std::complex<double>> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  double theta(int j) const noexcept;
};

/// M must be a power of two and at least twice the support width
/// (GridTooCoarse otherwise).
CharFnGrid charfn_grid(const SignedSeq& pmf, int M = kDefaultGridSize);

enum class LogBranch {
  /// Drift factored out, continuous logarithm of the zero-winding residual.
  Factored,
  /// Principal logarithm of phi itself. Points on the branch cut take the
  /// mean of the two one-sided limits.
  Raw,
};

/// Discrete Fourier coefficients c_n, n in [-max_index, max_index], of a
/// logarithm of phi sampled on the grid.
struct LogFourierCoefficients {
  LogBranch branch = LogBranch::Factored;
  std::int64_t winding = 0;
  int max_index = 0;
  std::vector<std::complex<double>> values;

  std::complex<double> at(std::int64_t n) const noexcept;
};

/// Winding number of phi around 0 along the grid. VanishingCharFn if
/// min |phi| <= 1e-6, BranchFailure if adjacent samples turn by more than
/// 3 pi / 4 or the accumulated angle is not a multiple of 2 pi.
std::int64_t winding_number(const CharFnGrid& grid);

/// max_index defaults to M / 4.
LogFourierCoefficients log_fourier_coefficients(const CharFnGrid& grid, LogBranch branch, int max_index = -1);

/// lambda = -Re c_0, alpha_n = Re c_n / lambda, drift = winding number, from
/// the factored coefficients with |n| <= M / 4.
IpcpParams extract_ipcp_params(const CharFnGrid& grid);

/// Largest |phi(theta_j) - reconstructed(theta_j)| over the grid.
double reconstruction_error(const CharFnGrid& grid, const IpcpParams& params);

/// IPCP verdict for an integer-valued p.m.f.: on exact sequences, any
/// polynomial root within 1e-9 of the unit circle is a zero of phi; on
/// truncated ones, min |phi| on the M-point grid with the DPCP thresholds.
/// `contrast` flags IPCP-but-not-DPCP.
ClassificationReport classify_ipcp(const SignedSeq& pmf, int M = kDefaultGridSize, const ClassifyOptions& options = {});

/// X = drift + X_+ - X_- with X_+, X_- one-sided DPCP laws built from the
/// positive and negative halves of alpha (rates lambda alpha_{+-k}).
struct IpcpPmf {
  SignedSeq pmf;
  double window_mass = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  /// lambda_+ or lambda_- came out negative (possible with signed alpha).
  bool negative_side_rate = false;
};

/// P(X = k) for k in [lo, hi]. Each side is expanded to
/// max(|lo|, |hi|) + |drift| + extra_terms masses before convolving.
IpcpPmf ipcp_pmf(const IpcpParams& params, std::int64_t lo, std::int64_t hi, int extra_terms = 256);

/// X = sum_{k != 0} k N_k, N_k signed Poisson with rate lambda alpha_k.
struct PoissonComponent {
  std::int64_t jump;
  double rate;
};

std::vector<PoissonComponent> weighted_signed_poisson_components(const IpcpParams& params);

/// sum over components of rate (e^{i k theta} - 1).
std::complex<double> component_exponent(const std::vector<PoissonComponent>& components, double theta) noexcept;

/// Signed compound Poisson form: e^{i drift theta} exp{lambda (psi(theta) - 1)}
/// with psi the characteristic function of the signed jump law alpha.
std::complex<double> compound_poisson_charfn(const IpcpParams& params, double theta) noexcept;

}  // namespace sidkit
