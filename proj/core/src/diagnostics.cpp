#include "lvpert/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

double orient(PopulationState a, PopulationState b, PopulationState c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool within_box(PopulationState a, PopulationState b, PopulationState p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

double distance(PopulationState a, PopulationState b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Intersection point of segments [p1, p2] and [q1, q2], if any.
std::optional<PopulationState> segment_intersection(PopulationState p1, PopulationState p2, PopulationState q1,
                                                    PopulationState q2) {
  if (std::max(p1.x, p2.x) < std::min(q1.x, q2.x) || std::max(q1.x, q2.x) < std::min(p1.x, p2.x) ||
      std::max(p1.y, p2.y) < std::min(q1.y, q2.y) || std::max(q1.y, q2.y) < std::min(p1.y, p2.y)) {
    return std::nullopt;
  }
  const double d1 = orient(q1, q2, p1);
  const double d2 = orient(q1, q2, p2);
  const double d3 = orient(p1, p2, q1);
  const double d4 = orient(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    const double s = d1 / (d1 - d2);
    return PopulationState{p1.x + s * (p2.x - p1.x), p1.y + s * (p2.y - p1.y)};
  }
  // Touching or collinear overlap: report the first shared endpoint.
  if (d3 == 0 && within_box(p1, p2, q1)) return q1;
  if (d4 == 0 && within_box(p1, p2, q2)) return q2;
  if (d1 == 0 && within_box(q1, q2, p1)) return p1;
  if (d2 == 0 && within_box(q1, q2, p2)) return p2;
  return std::nullopt;
}

}  // namespace

std::optional<double> divergence_time(const Trajectory& approx, const Trajectory& reference, double delta) {
  if (!(delta > 0.0)) throw ArgumentError("delta must be positive");
  if (approx.size() != reference.size()) throw ArgumentError("trajectories have different lengths");
  for (std::size_t k = 0; k < approx.size(); ++k) {
    if (approx[k].t != reference[k].t) throw ArgumentError("trajectories are sampled on different grids");
  }
  for (std::size_t k = 0; k < approx.size(); ++k) {
    const Sample& a = approx[k];
    const Sample& r = reference[k];
    const double dev = std::max(std::abs(a.x - r.x), std::abs(a.y - r.y));
    const double scale = 1.0 + std::max(std::abs(r.x), std::abs(r.y));
    if (dev / scale > delta) return r.t;
  }
  return std::nullopt;
}

std::optional<SelfIntersection> self_intersection(std::span<const PopulationState> pts) {
  if (pts.size() < 4) throw ArgumentError("self_intersection needs at least 4 points");
  const std::size_t segments = pts.size() - 1;
  // A polyline that returns to its start within one sampling step is closed:
  // its first and last segments meet at the seam.
  const double gap = distance(pts.front(), pts.back());
  const bool closed =
      gap <= distance(pts[0], pts[1]) && gap <= distance(pts[segments - 1], pts[segments]);

  for (std::size_t i = 0; i + 2 < segments; ++i) {
    for (std::size_t j = i + 2; j < segments; ++j) {
      if (closed && i == 0 && j == segments - 1) continue;
      if (auto hit = segment_intersection(pts[i], pts[i + 1], pts[j], pts[j + 1])) {
        return SelfIntersection{i, j, hit->x, hit->y};
      }
    }
  }
  return std::nullopt;
}

std::optional<SelfIntersection> self_intersection(const Trajectory& traj) {
  std::vector<PopulationState> pts;
  pts.reserve(traj.size());
  for (const Sample& s : traj) pts.push_back(s.state());
  return self_intersection(pts);
}

DriftResult conservation_drift(const Trajectory& traj, const ModelParams& p) {
  if (traj.empty()) throw ArgumentError("empty trajectory");
  const PopulationState first = traj.front().state();
  if (first.x <= 0.0 || first.y <= 0.0) {
    throw DomainError("conservation_drift: first sample must be strictly positive");
  }
  const double c0 = conserved_quantity(p, first);
  DriftResult out;
  for (const Sample& s : traj) {
    if (s.x <= 0.0 || s.y <= 0.0) {
      ++out.excluded;
      continue;
    }
    out.max_drift = std::max(out.max_drift, std::abs(conserved_quantity(p, s.state()) - c0));
  }
  return out;
}

ComparisonRun run_comparison(const InitialValueProblem& ivp, MethodKind method, int order,
                             const ComparisonSettings& settings) {
  if (settings.points < 2) throw ArgumentError("points must be >= 2");
  const std::vector<double> grid = linspace(0.0, ivp.t_end(), settings.points);

  Trajectory reference = integrate(ivp, settings.integrator, grid);

  const PolynomialPair poly = approximant(ivp, method, order);
  std::vector<Sample> samples;
  samples.reserve(grid.size());
  for (const double t : grid) samples.push_back({t, poly.x(t), poly.y(t)});
  Trajectory approx(std::move(samples));

  DiagnosticsReport report;
  report.method = method;
  report.order = order;
  report.t_end = ivp.t_end();
  report.divergence_time = divergence_time(approx, reference, settings.delta);
  if (approx.size() >= 4) report.self_intersection = self_intersection(approx);
  if (ivp.initial().x > 0.0 && ivp.initial().y > 0.0) {
    const DriftResult drift = conservation_drift(approx, ivp.params());
    report.max_invariant_drift = drift.max_drift;
    report.drift_excluded = drift.excluded;
    report.max_invariant_drift_ref = conservation_drift(reference, ivp.params()).max_drift;
    try {
      report.period_estimate = estimate_period(ivp, settings.integrator);
    } catch (const PeriodNotFoundError&) {
      report.period_estimate.reset();
    } catch (const DomainError&) {
      report.period_estimate.reset();
    }
  }
  if (report.period_estimate && ivp.t_end() >= *report.period_estimate && settings.points >= 4) {
    const double period = *report.period_estimate;
    report.closed_orbit_ref = closed_orbit_check(reference, ivp.initial(), period, settings.closure_eps);
    report.closed_orbit = closed_orbit_check(approx, ivp.initial(), period, settings.closure_eps);
  }
  return {std::move(reference), std::move(approx), report};
}

DiagnosticsReport failure_report(const InitialValueProblem& ivp, MethodKind method, int order,
                                 const ComparisonSettings& settings) {
  return run_comparison(ivp, method, order, settings).report;
}

}  // namespace lvpert
