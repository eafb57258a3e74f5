#include "lvpert/polynomial.hpp"

#include <algorithm>

namespace lvpert {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial Polynomial::monomial(double coeff, std::size_t degree) {
  std::vector<double> c(degree + 1, 0.0);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial();
  std::vector<double> c(coeffs_.size() - 1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) c[n - 1] = static_cast<double>(n) * coeffs_[n];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::integral() const {
  std::vector<double> c(coeffs_.size() + 1, 0.0);
  for (std::size_t n = 0; n < coeffs_.size(); ++n) c[n + 1] = coeffs_[n] / static_cast<double>(n + 1);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::truncated(std::size_t max_degree) const {
  if (max_degree >= degree()) return *this;
  return Polynomial(std::vector<double>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(max_degree + 1)));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0.0);
  for (std::size_t n = 0; n < rhs.coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Polynomial multiply_truncated(const Polynomial& lhs, const Polynomial& rhs, std::size_t max_degree) {
  const std::size_t deg = std::min(lhs.degree() + rhs.degree(), max_degree);
  std::vector<double> c(deg + 1, 0.0);
  for (std::size_t i = 0; i <= std::min(lhs.degree(), deg); ++i) {
    const double li = lhs.coeff(i);
    if (li == 0.0) continue;
    for (std::size_t j = 0; j <= std::min(rhs.degree(), deg - i); ++j) c[i + j] += li * rhs.coeff(j);
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  return multiply_truncated(lhs, rhs, lhs.degree() + rhs.degree());
}

}  // namespace lvpert
