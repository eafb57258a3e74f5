#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lvpert/model.hpp"
#include "lvpert/trajectory.hpp"

namespace lvpert {

inline constexpr int kDefaultSeriesOrder = 10;

/// Model, initial populations and horizon. Throws ArgumentError on a
/// non-positive horizon or a negative / non-finite initial state.
class InitialValueProblem {
 public:
  InitialValueProblem(ModelParams params, PopulationState initial, double t_end);

  const ModelParams& params() const noexcept { return params_; }
  PopulationState initial() const noexcept { return initial_; }
  double t_end() const noexcept { return t_end_; }

  InitialValueProblem with_t_end(double t_end) const { return {params_, initial_, t_end}; }

 private:
  ModelParams params_;
  PopulationState initial_;
  double t_end_;
};

/// Truncated power series x(t) = sum X[n] t^n, y(t) = sum Y[n] t^n about t = 0.
class SeriesSolution {
 public:
  /// Both arrays must be non-empty and of equal length.
  SeriesSolution(std::vector<double> x_coeffs, std::vector<double> y_coeffs);

  std::size_t order() const noexcept { return x_.size() - 1; }
  std::span<const double> x_coeffs() const noexcept { return x_; }
  std::span<const double> y_coeffs() const noexcept { return y_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
};

/// Taylor coefficients through t^order from the Cauchy-product recurrence
///
///   (n+1) X[n+1] =  a X[n] - b sum_k X[k] Y[n-k]
///   (n+1) Y[n+1] = -c Y[n] + d sum_k X[k] Y[n-k]
///
/// The convolution is accumulated with compensated summation.
SeriesSolution taylor_coefficients(const InitialValueProblem& ivp, int order);

/// Horner evaluation of both truncations. Components may be negative.
PopulationState evaluate_series(const SeriesSolution& s, double t);

/// One sample per grid point. Throws ArgumentError for an invalid grid.
Trajectory sample_series(const SeriesSolution& s, std::span<const double> t_grid);

/// Root-test estimate of the convergence radius over the top half of the
/// available orders, 1 / max_n max(|X[n]|, |Y[n]|)^(1/n).
/// std::nullopt means unbounded (all top-half coefficients below 1e-300).
/// Throws ArgumentError for order < 5.
std::optional<double> coefficient_growth(const SeriesSolution& s);

}  // namespace lvpert
