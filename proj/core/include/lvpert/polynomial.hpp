#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lvpert {

/// Dense real polynomial in t, coefficients in increasing degree.
/// The zero polynomial has a single zero coefficient.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs) : Polynomial(std::vector<double>(coeffs)) {}

  static Polynomial constant(double value) { return Polynomial({value}); }
  static Polynomial monomial(double coeff, std::size_t degree);

  /// Index of the last stored coefficient (trailing zeros are kept).
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of t^n, zero past the stored degree.
  double coeff(std::size_t n) const noexcept { return n < coeffs_.size() ? coeffs_[n] : 0.0; }

  double operator()(double t) const noexcept;

  Polynomial derivative() const;
  /// Antiderivative vanishing at t = 0.
  Polynomial integral() const;
  /// Drops every term of degree > max_degree.
  Polynomial truncated(std::size_t max_degree) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, double s) { return lhs *= s; }
  friend Polynomial operator*(double s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

 private:
  std::vector<double> coeffs_;
};

/// Product truncated to degree <= max_degree without forming the discarded terms.
Polynomial multiply_truncated(const Polynomial& lhs, const Polynomial& rhs, std::size_t max_degree);

}  // namespace lvpert
