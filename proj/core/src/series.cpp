#include "lvpert/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

constexpr double kNegligibleCoeff = 1e-300;

}  // namespace

InitialValueProblem::InitialValueProblem(ModelParams params, PopulationState initial, double t_end)
    : params_(params), initial_(initial), t_end_(t_end) {
  if (!std::isfinite(t_end) || t_end <= 0.0) {
    throw ArgumentError("t_end must be finite and positive");
  }
  if (!std::isfinite(initial.x) || !std::isfinite(initial.y) || initial.x < 0.0 || initial.y < 0.0) {
    throw ArgumentError("initial populations must be finite and non-negative");
  }
}

SeriesSolution::SeriesSolution(std::vector<double> x_coeffs, std::vector<double> y_coeffs)
    : x_(std::move(x_coeffs)), y_(std::move(y_coeffs)) {
  if (x_.empty() || x_.size() != y_.size()) {
    throw ArgumentError("series coefficient arrays must be non-empty and of equal length");
  }
}

SeriesSolution taylor_coefficients(const InitialValueProblem& ivp, int order) {
  if (order < 0) {
    throw ArgumentError("series order must be >= 0");
  }
  const ModelParams& p = ivp.params();
  const auto n_terms = static_cast<std::size_t>(order) + 1;
  std::vector<double> x(n_terms);
  std::vector<double> y(n_terms);
  x[0] = ivp.initial().x;
  y[0] = ivp.initial().y;
  if (order >= 1) {
    // Closed forms of the first-order terms, kept bitwise.
    const double xy = x[0] * y[0];
    x[1] = p.a() * x[0] - p.b() * xy;
    y[1] = p.d() * xy - p.c() * y[0];
  }
  for (std::size_t n = 1; n + 1 < n_terms; ++n) {
    CompensatedSum conv;
    for (std::size_t k = 0; k <= n; ++k) conv.add(x[k] * y[n - k]);
    const double xy = conv.value();
    const auto np1 = static_cast<double>(n + 1);
    x[n + 1] = (p.a() * x[n] - p.b() * xy) / np1;
    y[n + 1] = (-p.c() * y[n] + p.d() * xy) / np1;
  }
  return SeriesSolution(std::move(x), std::move(y));
}

PopulationState evaluate_series(const SeriesSolution& s, double t) {
  const auto horner = [t](std::span<const double> c) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  return {horner(s.x_coeffs()), horner(s.y_coeffs())};
}

Trajectory sample_series(const SeriesSolution& s, std::span<const double> t_grid) {
  validate_grid(t_grid);
  std::vector<Sample> samples;
  samples.reserve(t_grid.size());
  for (const double t : t_grid) {
    const PopulationState v = evaluate_series(s, t);
    samples.push_back({t, v.x, v.y});
  }
  return Trajectory(std::move(samples));
}

std::optional<double> coefficient_growth(const SeriesSolution& s) {
  const std::size_t order = s.order();
  if (order < 5) {
    throw ArgumentError("coefficient_growth needs order >= 5, got " + std::to_string(order));
  }
  double max_root = 0.0;
  bool any_significant = false;
  for (std::size_t n = std::max<std::size_t>(order / 2, 1); n <= order; ++n) {
    const double mag = std::max(std::abs(s.x_coeffs()[n]), std::abs(s.y_coeffs()[n]));
    if (mag < kNegligibleCoeff) continue;
    any_significant = true;
    max_root = std::max(max_root, std::pow(mag, 1.0 / static_cast<double>(n)));
  }
  if (!any_significant) return std::nullopt;
  return 1.0 / max_root;
}

}  // namespace lvpert
