#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "lvpert/integrator.hpp"
#include "lvpert/methods.hpp"
#include "lvpert/trajectory.hpp"

namespace lvpert {

inline constexpr double kDefaultDivergenceDelta = 1.0;

/// First grid time where
///   max(|x_a - x_r|, |y_a - y_r|) / (1 + max(|x_r|, |y_r|)) > delta.
/// Throws ArgumentError when the grids differ or delta <= 0.
std::optional<double> divergence_time(const Trajectory& approx, const Trajectory& reference, double delta);

struct SelfIntersection {
  std::size_t i = 0;  ///< first segment (samples i, i+1)
  std::size_t j = 0;  ///< second segment, j >= i + 2
  double x = 0.0;
  double y = 0.0;
};

/// First crossing, in lexicographic (i, j) order, between two non-adjacent
/// segments of the polyline through the points. Touching and collinear
/// overlap count. The first and last segments are treated as adjacent so a
/// closed orbit is not reported. Throws ArgumentError for fewer than 4 points.
std::optional<SelfIntersection> self_intersection(std::span<const PopulationState> polyline);
std::optional<SelfIntersection> self_intersection(const Trajectory& traj);

struct DriftResult {
  double max_drift = 0.0;
  /// Samples skipped because a coordinate was not strictly positive.
  std::size_t excluded = 0;
};

/// Max |C(sample) - C(first sample)| over samples in the open quadrant.
/// Throws DomainError when the first sample is not strictly positive.
DriftResult conservation_drift(const Trajectory& traj, const ModelParams& p);

struct DiagnosticsReport {
  MethodKind method = MethodKind::Taylor;
  int order = 0;
  double t_end = 0.0;
  std::optional<double> divergence_time;
  double max_invariant_drift = 0.0;  ///< approximant
  std::size_t drift_excluded = 0;
  std::optional<SelfIntersection> self_intersection;  ///< approximant phase curve
  bool closed_orbit = false;                          ///< approximant
  double max_invariant_drift_ref = 0.0;
  bool closed_orbit_ref = false;
  std::optional<double> period_estimate;
};

struct ComparisonSettings {
  std::size_t points = 2001;
  IntegratorConfig integrator;
  double delta = kDefaultDivergenceDelta;
  double closure_eps = kDefaultClosureEps;
};

struct ComparisonRun {
  Trajectory reference;
  Trajectory approx;
  DiagnosticsReport report;
};

/// Runs the method and the reference on the same grid over [0, t_end] and
/// fills every report field.
ComparisonRun run_comparison(const InitialValueProblem& ivp, MethodKind method, int order,
                             const ComparisonSettings& settings = {});

DiagnosticsReport failure_report(const InitialValueProblem& ivp, MethodKind method, int order,
                                 const ComparisonSettings& settings = {});

}  // namespace lvpert
