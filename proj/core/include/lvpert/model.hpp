#pragma once

#include <array>
#include <complex>
#include <string_view>
#include <vector>

namespace lvpert {

/// Rates of the prey–predator system
///
///   dx/dt =  x (a - b y)
///   dy/dt = -y (c - d x)
///
/// All four rates are strictly positive. The only exception is the decoupled
/// sanity model (b = d = 0), which has to be requested explicitly.
class ModelParams {
 public:
  /// Throws DomainError unless a, b, c, d are finite and > 0.
  static ModelParams make(double a, double b, double c, double d);

  /// Uncoupled exponentials x' = a x, y' = -c y. Requires a, c > 0.
  static ModelParams decoupled(double a, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double d() const noexcept { return d_; }

  bool coupled() const noexcept { return b_ != 0.0 && d_ != 0.0; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(double a, double b, double c, double d) noexcept : a_(a), b_(b), c_(c), d_(d) {}

  double a_;
  double b_;
  double c_;
  double d_;
};

/// A point of the phase plane. Populations are non-negative for physical
/// states; approximants are allowed to leave the quadrant.
struct PopulationState {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

struct Velocity {
  double dx = 0.0;
  double dy = 0.0;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

enum class FixedPointKind { Saddle, Center };

std::string_view to_string(FixedPointKind kind) noexcept;

struct FixedPointReport {
  PopulationState location;
  FixedPointKind kind;
  std::array<std::complex<double>, 2> eigenvalues;
};

/// (x(a - b y), -y(c - d x)). Axes are legal inputs. Throws NonFiniteError.
Velocity vector_field(const ModelParams& p, PopulationState s);

/// [[a - b y, -b x], [d y, d x - c]]. Throws NonFiniteError.
Matrix2 jacobian(const ModelParams& p, PopulationState s);

/// Eigenvalues of a real 2x2 matrix from trace and determinant.
std::array<std::complex<double>, 2> eigenvalues(const Matrix2& m);

/// Saddle at the origin and center at (c/d, a/b), in that order.
/// Throws DomainError for decoupled parameters, which have no interior center.
std::vector<FixedPointReport> fixed_points(const ModelParams& p);

/// c ln x + a ln y - d x - b y.
/// Throws NonFiniteError for NaN/inf input and DomainError when x <= 0 or y <= 0.
double conserved_quantity(const ModelParams& p, PopulationState s);

/// conserved_quantity(p, s) - conserved_quantity(p, s0).
double invariant_residual(const ModelParams& p, PopulationState s, PopulationState s0);

}  // namespace lvpert
