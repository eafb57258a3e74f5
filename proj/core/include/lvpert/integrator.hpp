#pragma once

#include <limits>
#include <optional>
#include <span>

#include "lvpert/series.hpp"
#include "lvpert/trajectory.hpp"

namespace lvpert {

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = std::numeric_limits<double>::infinity();
  /// std::nullopt selects the step automatically.
  std::optional<double> initial_step;

  /// Throws ArgumentError unless tolerances lie in (0, 1) and steps are positive.
  void validate() const;
};

/// Reference solution sampled at every grid point through dense output of an
/// adaptive Dormand–Prince 5(4) pair with PI step control.
///
/// Positive components are integrated as logarithms, so populations stay
/// positive and keep their relative accuracy when they collapse towards an
/// axis; a component that starts at exactly zero stays zero. The local error
/// of ln x is a relative error of x, so each step is accepted when it stays
/// below abs_tol + rel_tol in the RMS norm.
///
/// Grid points must lie in [0, ivp.t_end()]. With record_residuals the
/// invariant residual is stored per sample, which needs x0, y0 > 0.
/// Throws StepSizeUnderflowError when the step drops below 1e-14 t_end and
/// DivergenceError on a non-finite state.
Trajectory integrate(const InitialValueProblem& ivp, const IntegratorConfig& cfg, std::span<const double> t_grid,
                     bool record_residuals = false);

/// Same integration, sampled only at accepted step boundaries on [0, t_end].
Trajectory integrate_steps(const InitialValueProblem& ivp, const IntegratorConfig& cfg);

/// First return time to the Poincaré section through the initial point
/// (y = y0 crossed in the starting direction of dy/dt; x = x0 instead when
/// |dx/dt| dominates at the start), polished by bisection to 1e-10.
/// Throws DomainError at the center or off the open quadrant and
/// PeriodNotFoundError when nothing returns within 100 / sqrt(a c).
double estimate_period(const InitialValueProblem& ivp, const IntegratorConfig& cfg = {});

inline constexpr double kDefaultClosureEps = 1e-6;

/// True iff the curve comes back within eps of the initial point for
/// t in [0.5 T, 1.5 T]. The distance is minimised on a local cubic
/// reconstruction of the sampled curve. Throws ArgumentError when the
/// trajectory ends before T.
bool closed_orbit_check(const Trajectory& traj, PopulationState start, double period, double eps);

/// As above with T from estimate_period(ivp).
bool closed_orbit_check(const Trajectory& traj, const InitialValueProblem& ivp, double eps);

/// Smallest distance from `start` to the curve over t in [0.5 T, 1.5 T].
double return_distance(const Trajectory& traj, PopulationState start, double period);

}  // namespace lvpert
