#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sidkit/signed_series.hpp"

namespace sidkit {

/// Discrete pseudo compound Poisson parameters: p.g.f.
///   G(z) = exp{ lambda * sum_{k>=1} alpha_k (z^k - 1) }
/// with alpha stored at offset 1. alpha_k may be negative.
struct DpcpParams {
  double lambda;
  SignedSeq alpha;

  /// Checks lambda > 0 and alpha.offset() == 1.
  DpcpParams(double lambda, SignedSeq alpha);

  /// sum_k alpha_k - 1; zero for a properly normalized jump law.
  double normalization_residue() const noexcept { return alpha.sum() - 1.0; }
  /// lambda * alpha_k, index k-1.
  std::vector<double> rates() const;
};

enum class Family { Dpcp, Ipcp };
enum class Verdict { Yes, No, Inconclusive };

struct ClassificationReport {
  Family family = Family::Dpcp;
  Verdict verdict = Verdict::Inconclusive;
  /// Human-readable justification: the sufficient condition used, the zero
  /// found, or why the question is open at this truncation.
  std::string witness;
  /// Zero location backing a No verdict.
  std::optional<std::complex<double>> zero;
  /// Smallest modulus seen on the search set.
  double min_modulus = 0.0;
  /// IPCP only: signed integer-valued ID but not signed discrete ID.
  bool contrast = false;

  /// "DPCP", "NotDPCP", "IPCP", "NotIPCP" or "Inconclusive".
  std::string verdict_name() const;
};

struct ClassifyOptions {
  int radii = 64;
  int angles = 512;
  double root_tolerance = 1e-9;
  double grid_zero_tolerance = 1e-6;
  double grid_safe_modulus = 0.05;
  double tail_tolerance = 1e-6;
};

/// Generic compound Poisson recursion in rate form:
///   P_0 = exp(-sum rates), (j+1) P_{j+1} = sum_u u rates_u P_{j+1-u}
/// with rates[u-1] the rate of jump size u. Used for any sign pattern.
SignedSeq pmf_from_rates(std::span<const double> rates, int n_max);

/// P_0..P_{n_max} by the recursion above.
SignedSeq pmf_from_params_recursive(const DpcpParams& p, int n_max);

inline constexpr int kMaxExplicitOrder = 40;

/// P_0..P_{n_max} by summing over integer partitions of n:
///   P_n = e^{-lambda} sum_{k_1 + 2k_2 + ... = n} prod_u (lambda alpha_u)^{k_u} / k_u!
/// Independent of the recursion. PartitionOverflow for n_max > 40.
SignedSeq pmf_from_params_explicit(const DpcpParams& p, int n_max);

/// lambda = -ln P_0 and alpha_k = [z^k] ln G(z) / lambda, read from the
/// logarithm of the p.g.f. truncated at `order`.
DpcpParams extract_dpcp_params(const SignedSeq& pmf, int order = kDefaultOrder);

/// DPCP membership of a probability mass function (nonnegative, sums to 1):
///  1. P_0 > 0.5, or strictly decreasing masses on an exact sequence;
///  2. exact sequences: companion-matrix roots, any |z| <= 1 + tol is a zero;
///  3. truncated sequences: min |G| on a closed-disk polar grid.
ClassificationReport classify_dpcp(const SignedSeq& pmf, const ClassifyOptions& options = {});

/// Grid minimum of |sum_k pmf_k z^k| over the closed unit disk.
struct DiskMinimum {
  double modulus;
  std::complex<double> at;
};
DiskMinimum disk_minimum(std::span<const double> coeffs, int radii, int angles);

struct VanHarnCheck {
  double a, b, c, d;
  bool all_positive;
  double bound;  // min{a^2/3, c/a, ad/(2c), c^2/(3d)}
  bool satisfied;
};

struct ValidityReport {
  int order = 0;
  bool first_positive = false;        // a_1 > 0
  bool penultimate_positive = false;  // a_{m-1} > 0
  bool last_positive = false;         // a_m > 0
  bool levy_necessary() const noexcept { return first_positive && penultimate_positive && last_positive; }
  std::optional<VanHarnCheck> van_harn;
  int horizon = 0;
  /// First n <= horizon with P_n < 0, if any.
  std::optional<int> first_negative;
  double min_mass = 0.0;
};

struct ValidityOptions {
  bool van_harn = false;
  int horizon = 200;
};

/// Checks of exp{ scale * sum_{k=1..m} a_k (z^k - 1) } being a p.g.f.:
/// Levy's necessary sign conditions, van Harn's sufficient inequalities for
/// m = 4 (pattern a, -b, c, d; WrongOrder otherwise), and a scan of P_n for
/// a negative mass.
ValidityReport finite_order_validity(const SignedSeq& a, double lambda_scale, const ValidityOptions& options = {});

}  // namespace sidkit
