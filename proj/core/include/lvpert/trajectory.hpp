#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lvpert/model.hpp"

namespace lvpert {

struct Sample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;

  PopulationState state() const noexcept { return {x, y}; }
};

/// Time-ordered samples of a solution, optionally with the invariant
/// residual recorded at each sample.
///
/// Invariants: times strictly increasing, all values finite, residuals (when
/// present) one per sample. The constructor enforces them.
class Trajectory {
 public:
  Trajectory() = default;
  explicit Trajectory(std::vector<Sample> samples,
                      std::optional<std::vector<double>> residuals = std::nullopt);

  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  const Sample& operator[](std::size_t i) const { return samples_[i]; }
  const Sample& front() const { return samples_.front(); }
  const Sample& back() const { return samples_.back(); }

  std::span<const Sample> samples() const noexcept { return samples_; }
  const std::optional<std::vector<double>>& residuals() const noexcept { return residuals_; }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  std::vector<double> times() const;

 private:
  std::vector<Sample> samples_;
  std::optional<std::vector<double>> residuals_;
};

/// Throws ArgumentError if the grid is empty, not strictly increasing,
/// non-finite, or starts below zero.
void validate_grid(std::span<const double> grid);

/// n equally spaced points on [t0, t1], endpoints exact. n >= 2.
std::vector<double> linspace(double t0, double t1, std::size_t n);

}  // namespace lvpert
