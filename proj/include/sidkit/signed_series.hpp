#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sidkit {

inline constexpr int kDefaultOrder = 64;

/// A real sequence stored over the contiguous index window
/// [offset, offset + size - 1].
///
/// When `truncated()` is false the sequence is the whole object and every
/// index outside the window is an exact zero. When it is true, indices past
/// `order()` are unknown rather than zero; indices below `offset()` are
/// always exact zeros.
class SignedSeq {
 public:
  SignedSeq(std::int64_t offset, std::vector<double> coeffs, bool truncated = false);

  static SignedSeq delta(std::int64_t at = 0);

  std::int64_t offset() const noexcept { return offset_; }
  /// Highest stored index; for truncated sequences the last known index.
  std::int64_t order() const noexcept {
    return offset_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  bool truncated() const noexcept { return truncated_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Value at an absolute index; zero outside the stored window.
  double at(std::int64_t index) const noexcept;

  double sum() const noexcept;
  /// Magnitude of the last retained coefficient; a crude indicator of how
  /// much a truncated series is still moving at its cut.
  double tail_indicator() const noexcept;

  /// Trailing coefficients below 1e-15 in magnitude are trimmed on exact
  /// sequences. Truncated sequences are returned unchanged.
  SignedSeq canonical() const;
  SignedSeq shifted(std::int64_t by) const;
  /// k -> -k. Only valid on exact sequences.
  SignedSeq reflected() const;
  /// Keeps indices <= order and marks the result truncated.
  SignedSeq truncated_to(std::int64_t order) const;

 private:
  std::int64_t offset_;
  std::vector<double> coeffs_;
  bool truncated_;
};

/// Sum of absolute values of the stored coefficients.
double total_variation(const SignedSeq& a) noexcept;

/// Cauchy product. If either input is truncated the result is known only up
/// to min over truncated inputs x of (order(x) + offset(other)).
SignedSeq convolve(const SignedSeq& a, const SignedSeq& b);

/// Truncated power series with coefficients of degree 0..order().
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<double> coeffs);

  static PowerSeries zero(int order);
  /// View of a sequence with offset >= 0 as a power series of the requested
  /// order. Exact sequences are zero-padded; truncated ones cap the order at
  /// their own.
  static PowerSeries from_seq(const SignedSeq& s, int order = kDefaultOrder);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  double operator[](std::size_t k) const noexcept { return coeffs_[k]; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  double tail_indicator() const noexcept;

  /// As a truncated SignedSeq at offset 0.
  SignedSeq to_seq() const;

 private:
  std::vector<double> coeffs_;
};

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator*(double scale, const PowerSeries& s);

/// exp(s) via n r_n = sum_{k=1..n} k s_k r_{n-k}. Throws Overflow.
PowerSeries series_exp(const PowerSeries& s);
/// Inverse of series_exp; requires s_0 > 0 (NonPositiveConstantTerm).
PowerSeries series_log(const PowerSeries& s);
/// s^r by the power recurrence n s_0 p_n = sum ((r + 1) k - n) s_k p_{n-k};
/// requires s_0 > 0.
PowerSeries series_pow(const PowerSeries& s, double r);

}  // namespace sidkit
