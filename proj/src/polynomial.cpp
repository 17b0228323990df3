#include "sidkit/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace sidkit::poly {

Complex evaluate(std::span<const double> coeffs, Complex z) noexcept {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

Complex derivative(std::span<const double> coeffs, Complex z) noexcept {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * coeffs[k];
  return acc;
}

Complex polish(std::span<const double> coeffs, Complex z) {
  for (int iter = 0; iter < 8; ++iter) {
    const Complex f = evaluate(coeffs, z);
    const Complex df = derivative(coeffs, z);
    if (std::abs(df) == 0.0) break;
    const Complex next = z - f / df;
    // Newton can wander off a multiple root; only accept improvements.
    if (std::abs(evaluate(coeffs, next)) >= std::abs(f)) break;
    z = next;
  }
  return z;
}

}  // namespace

std::vector<Complex> roots(std::span<const double> coeffs) {
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == 0.0) --degree;
  if (degree <= 1) return {};
  --degree;
  const auto poly = coeffs.first(degree + 1);

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(degree), static_cast<Eigen::Index>(degree));
  const double lead = poly[degree];
  for (std::size_t i = 1; i < degree; ++i) companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < degree; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(degree - 1)) = -poly[i] / lead;
  }

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const auto& eig = solver.eigenvalues();
  std::vector<Complex> out;
  out.reserve(degree);
  for (Eigen::Index i = 0; i < eig.size(); ++i) out.push_back(polish(poly, eig[i]));
  return out;
}

}  // namespace sidkit::poly
