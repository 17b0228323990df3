#include "sidkit/signed_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sidkit/error.hpp"

namespace sidkit {

namespace {

constexpr double kTrimTolerance = 1e-15;

void check_finite(const std::vector<double>& coeffs, const char* op) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) {
      throw errors::numerical("Overflow", std::string(op) + ": coefficient exceeds representable range");
    }
  }
}

}  // namespace

SignedSeq::SignedSeq(std::int64_t offset, std::vector<double> coeffs, bool truncated)
    : offset_(offset), coeffs_(std::move(coeffs)), truncated_(truncated) {
  if (coeffs_.empty()) {
    throw errors::validation("InvalidArgument", "SignedSeq needs at least one coefficient");
  }
}

SignedSeq SignedSeq::delta(std::int64_t at) { return SignedSeq(at, {1.0}); }

double SignedSeq::at(std::int64_t index) const noexcept {
  if (index < offset_ || index > order()) return 0.0;
  return coeffs_[static_cast<std::size_t>(index - offset_)];
}

double SignedSeq::sum() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0.0); }

double SignedSeq::tail_indicator() const noexcept { return std::abs(coeffs_.back()); }

SignedSeq SignedSeq::canonical() const {
  if (truncated_) return *this;
  std::vector<double> c = coeffs_;
  while (c.size() > 1 && std::abs(c.back()) < kTrimTolerance) c.pop_back();
  return SignedSeq(offset_, std::move(c), false);
}

SignedSeq SignedSeq::shifted(std::int64_t by) const { return SignedSeq(offset_ + by, coeffs_, truncated_); }

SignedSeq SignedSeq::reflected() const {
  if (truncated_) {
    throw errors::validation("InvalidArgument", "cannot reflect a truncated sequence");
  }
  std::vector<double> c(coeffs_.rbegin(), coeffs_.rend());
  return SignedSeq(-order(), std::move(c), false);
}

SignedSeq SignedSeq::truncated_to(std::int64_t new_order) const {
  if (new_order < offset_) {
    throw errors::validation("InvalidArgument", "truncation order below sequence offset");
  }
  if (truncated_ && new_order > order()) {
    throw errors::validation("InvalidArgument", "cannot extend a truncated sequence past its order");
  }
  std::vector<double> c(static_cast<std::size_t>(new_order - offset_ + 1), 0.0);
  const std::size_t keep = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), keep, c.begin());
  return SignedSeq(offset_, std::move(c), true);
}

double total_variation(const SignedSeq& a) noexcept {
  double tv = 0.0;
  for (double c : a.coeffs()) tv += std::abs(c);
  return tv;
}

SignedSeq convolve(const SignedSeq& a, const SignedSeq& b) {
  const std::int64_t offset = a.offset() + b.offset();
  std::int64_t last = a.order() + b.order();
  if (a.truncated()) last = std::min(last, a.order() + b.offset());
  if (b.truncated()) last = std::min(last, b.order() + a.offset());

  std::vector<double> out(static_cast<std::size_t>(last - offset + 1), 0.0);
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0.0) continue;
    for (std::size_t j = 0; j < bc.size() && i + j < out.size(); ++j) {
      out[i + j] += ac[i] * bc[j];
    }
  }
  return SignedSeq(offset, std::move(out), a.truncated() || b.truncated());
}

PowerSeries::PowerSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw errors::validation("InvalidArgument", "PowerSeries needs order >= 0");
  }
}

PowerSeries PowerSeries::zero(int order) { return PowerSeries(std::vector<double>(static_cast<std::size_t>(order) + 1, 0.0)); }

PowerSeries PowerSeries::from_seq(const SignedSeq& s, int order) {
  if (order < 0) throw errors::validation("InvalidArgument", "negative series order");
  if (s.offset() < 0) {
    throw errors::validation("InvalidArgument", "power series view needs a sequence with offset >= 0");
  }
  std::int64_t effective = order;
  if (s.truncated()) effective = std::min<std::int64_t>(effective, s.order());
  if (effective < 0) {
    throw errors::validation("InvalidArgument", "truncated sequence carries no known coefficient at degree 0");
  }
  std::vector<double> c(static_cast<std::size_t>(effective) + 1, 0.0);
  for (std::int64_t k = 0; k <= effective; ++k) c[static_cast<std::size_t>(k)] = s.at(k);
  return PowerSeries(std::move(c));
}

double PowerSeries::tail_indicator() const noexcept { return std::abs(coeffs_.back()); }

SignedSeq PowerSeries::to_seq() const { return SignedSeq(0, coeffs_, true); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  for (int n = 0; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) acc += a[k] * b[n - k];
    out[n] = acc;
  }
  return PowerSeries(std::move(out));
}

PowerSeries operator*(double scale, const PowerSeries& s) {
  std::vector<double> out = s.coeffs();
  for (double& c : out) c *= scale;
  return PowerSeries(std::move(out));
}

PowerSeries series_exp(const PowerSeries& s) {
  const int order = s.order();
  std::vector<double> r(static_cast<std::size_t>(order) + 1, 0.0);
  r[0] = std::exp(s[0]);
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += k * s[k] * r[n - k];
    r[n] = acc / n;
  }
  check_finite(r, "series_exp");
  return PowerSeries(std::move(r));
}

PowerSeries series_log(const PowerSeries& s) {
  if (!(s[0] > 0.0)) {
    throw errors::numerical("NonPositiveConstantTerm", "series_log: constant term must be positive");
  }
  const int order = s.order();
  std::vector<double> l(static_cast<std::size_t>(order) + 1, 0.0);
  l[0] = std::log(s[0]);
  // s' = s l'  =>  n s_0 l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
  for (int n = 1; n <= order; ++n) {
    double acc = n * s[n];
    for (int k = 1; k < n; ++k) acc -= k * l[k] * s[n - k];
    l[n] = acc / (n * s[0]);
  }
  check_finite(l, "series_log");
  return PowerSeries(std::move(l));
}

PowerSeries series_pow(const PowerSeries& s, double r) {
  if (!(s[0] > 0.0)) {
    throw errors::numerical("NonPositiveConstantTerm", "series_pow: constant term must be positive");
  }
  const int order = s.order();
  int degree = order;
  while (degree > 0 && s[degree] == 0.0) --degree;
  std::vector<double> out(static_cast<std::size_t>(order) + 1, 0.0);
  out[0] = std::pow(s[0], r);
  // s (s^r)' = r s' s^r  =>  n s_0 p_n = sum_{k=1}^{n} ((r + 1) k - n) s_k p_{n-k}
  for (int n = 1; n <= order; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= std::min(n, degree); ++k) acc += ((r + 1.0) * k - n) * s[k] * out[n - k];
    out[n] = acc / (n * s[0]);
  }
  check_finite(out, "series_pow");
  return PowerSeries(std::move(out));
}

}  // namespace sidkit
