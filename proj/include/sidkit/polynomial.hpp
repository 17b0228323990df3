#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sidkit::poly {

using Complex = std::complex<double>;

/// Horner evaluation of sum_k coeffs[k] z^k.
Complex evaluate(std::span<const double> coeffs, Complex z) noexcept;

/// All roots of sum_k coeffs[k] z^k from the companion-matrix eigenvalues,
/// each refined by a few Newton steps on the original polynomial. Trailing
/// zero coefficients are ignored; a constant polynomial has no roots.
std::vector<Complex> roots(std::span<const double> coeffs);

}  // namespace sidkit::poly
