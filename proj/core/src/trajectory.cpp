#include "lvpert/trajectory.hpp"

#include <cmath>
#include <string>

#include "lvpert/errors.hpp"

namespace lvpert {

Trajectory::Trajectory(std::vector<Sample> samples, std::optional<std::vector<double>> residuals)
    : samples_(std::move(samples)), residuals_(std::move(residuals)) {
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const Sample& s = samples_[i];
    if (!std::isfinite(s.t) || !std::isfinite(s.x) || !std::isfinite(s.y)) {
      throw NonFiniteError("trajectory sample " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(s.t > samples_[i - 1].t)) {
      throw ArgumentError("trajectory times must be strictly increasing");
    }
  }
  if (residuals_ && residuals_->size() != samples_.size()) {
    throw ArgumentError("trajectory residuals must have one entry per sample");
  }
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const Sample& s : samples_) out.push_back(s.t);
  return out;
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) {
    throw ArgumentError("time grid is empty");
  }
  if (!std::isfinite(grid.front()) || grid.front() < 0.0) {
    throw ArgumentError("time grid must start at a finite t >= 0");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || !(grid[i] > grid[i - 1])) {
      throw ArgumentError("time grid must be strictly increasing (index " + std::to_string(i) + ")");
    }
  }
}

std::vector<double> linspace(double t0, double t1, std::size_t n) {
  if (n < 2 || !(t1 > t0)) {
    throw ArgumentError("linspace needs n >= 2 and t1 > t0");
  }
  std::vector<double> out(n);
  const double span = t1 - t0;
  const auto last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = t0 + span * (static_cast<double>(i) / last);
  }
  out.back() = t1;
  return out;
}

}  // namespace lvpert
