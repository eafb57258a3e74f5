#include "lvpert/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lvpert/diagnostics.hpp"
#include "lvpert/errors.hpp"
#include "lvpert/integrator.hpp"
#include "lvpert/methods.hpp"
#include "lvpert/presets.hpp"
#include "lvpert/report_io.hpp"

namespace lvpert {
namespace {

constexpr double kEquivalenceTol = 1e-12;
constexpr double kEquivalenceTolLargeCoeffs = 1e-10;
constexpr double kConservationTol = 1e-8;
constexpr double kClosureEps = 1e-6;
constexpr double kDriftRatio = 1e3;
constexpr double kLinearPeriodTol = 1e-3;
constexpr double kDecoupledStateTol = 1e-9;
constexpr double kDecoupledCoeffTol = 1e-14;
constexpr std::size_t kGridPoints = 2001;

std::string num(double v) { return format_double(v); }

Trajectory sample_builder(const SeriesBuilder& build, const InitialValueProblem& ivp, int order,
                          const std::vector<double>& grid) {
  return sample_series(build(ivp, order), grid);
}

CheckResult first_order(const SeriesBuilder& build, const CasePreset& cp) {
  const InitialValueProblem ivp = cp.problem();
  const SeriesSolution s = build(ivp, 1);
  const ModelParams& p = cp.params;
  const double xy = cp.initial.x * cp.initial.y;
  const double x1 = p.a() * cp.initial.x - p.b() * xy;
  const double y1 = p.d() * xy - p.c() * cp.initial.y;
  const bool ok = s.x_coeffs()[1] == x1 && s.y_coeffs()[1] == y1;
  return {cp.name + ": first-order coefficients", ok,
          "X1=" + num(s.x_coeffs()[1]) + " Y1=" + num(s.y_coeffs()[1])};
}

CheckResult equivalence(const SeriesBuilder& build, const CasePreset& cp) {
  const InitialValueProblem ivp = cp.problem();
  double worst_excess = 0.0;
  std::ostringstream detail;
  bool ok = true;
  for (int n = 1; n <= 20; ++n) {
    const SeriesSolution taylor = build(ivp, n);
    const double tol = (cp.name == "case-I" && n > 15) ? kEquivalenceTolLargeCoeffs : kEquivalenceTol;
    const double dev = std::max({max_relative_deviation(adomian_series(ivp, n), taylor),
                                 max_relative_deviation(hpm_series(ivp, n), taylor),
                                 max_relative_deviation(vim_series(ivp, n), taylor)});
    worst_excess = std::max(worst_excess, dev / tol);
    if (!(dev <= tol)) {
      if (ok) detail << "first failure at N=" << n << " deviation " << num(dev);
      ok = false;
    }
  }
  if (ok) detail << "worst deviation/tolerance " << num(worst_excess);
  return {cp.name + ": adomian/hpm/vim match time series, N=1..20", ok, detail.str()};
}

CheckResult conservation(const CasePreset& cp, double t_end) {
  const InitialValueProblem ivp = cp.problem().with_t_end(t_end);
  const Trajectory ref = integrate(ivp, {}, linspace(0.0, t_end, 5001), true);
  double worst = 0.0;
  for (const double r : *ref.residuals()) worst = std::max(worst, std::abs(r));
  return {cp.name + ": reference conserves C on [0, " + num(t_end) + "]", worst <= kConservationTol,
          "max |C(t)-C(0)| = " + num(worst)};
}

CheckResult closure(const CasePreset& cp) {
  const InitialValueProblem base = cp.problem();
  const double period = estimate_period(base);
  const InitialValueProblem ivp = base.with_t_end(1.2 * period);
  const Trajectory ref = integrate(ivp, {}, linspace(0.0, 1.2 * period, kGridPoints));
  const double gap = return_distance(ref, cp.initial, period);
  const Trajectory one = integrate(base.with_t_end(period), {}, linspace(0.0, period, kGridPoints));
  const bool simple = !self_intersection(one).has_value();
  return {cp.name + ": reference orbit closes and is simple", gap < kClosureEps && simple,
          "T*=" + num(period) + " return gap " + num(gap) + (simple ? " simple" : " self-crossing")};
}

CheckResult divergence(const SeriesBuilder& build, const CasePreset& cp, int order) {
  const InitialValueProblem ivp = cp.problem();
  const auto grid = linspace(0.0, cp.default_t_end, kGridPoints);
  const Trajectory ref = integrate(ivp, {}, grid);
  const auto when = divergence_time(sample_builder(build, ivp, order, grid), ref, kDefaultDivergenceDelta);
  const bool ok = when && *when < cp.default_t_end;
  return {cp.name + ": series order " + std::to_string(order) + " diverges", ok,
          when ? "t_div=" + num(*when) : std::string("no divergence")};
}

CheckResult crossing(const SeriesBuilder& build, const CasePreset& cp) {
  const InitialValueProblem ivp = cp.problem();
  const auto grid = linspace(0.0, cp.default_t_end, kGridPoints);
  const auto hit = self_intersection(sample_builder(build, ivp, cp.default_order, grid));
  const double period = estimate_period(ivp);
  const Trajectory one = integrate(ivp.with_t_end(period), {}, linspace(0.0, period, kGridPoints));
  const bool ref_simple = !self_intersection(one).has_value();
  std::string detail = hit ? "series crosses at segments (" + std::to_string(hit->i) + ", " +
                                 std::to_string(hit->j) + ")"
                           : std::string("series curve is simple");
  return {cp.name + ": series phase curve crosses itself, reference does not", hit.has_value() && ref_simple,
          detail};
}

CheckResult drift_gap(const SeriesBuilder& build, const CasePreset& cp) {
  const InitialValueProblem ivp = cp.problem().with_t_end(3.0);
  const auto grid = linspace(0.0, 3.0, kGridPoints);
  const double series = conservation_drift(sample_builder(build, ivp, cp.default_order, grid), cp.params).max_drift;
  const double ref = conservation_drift(integrate(ivp, {}, grid), cp.params).max_drift;
  const double ratio = series / std::max(ref, std::numeric_limits<double>::min());
  return {cp.name + ": series drift exceeds reference drift by 1e3", ratio > kDriftRatio,
          "series " + num(series) + " reference " + num(ref)};
}

CheckResult linear_period() {
  const ModelParams p = ModelParams::make(1.0, 1.0, 1.0, 1.0);
  const InitialValueProblem ivp(p, {1.0 + 1e-4, 1.0}, 1.0);
  const double period = estimate_period(ivp);
  const double err = std::abs(period - 2.0 * std::numbers::pi);
  return {"linearized period near the center", err <= kLinearPeriodTol, "T=" + num(period)};
}

CheckResult decoupled(const SeriesBuilder& build) {
  const CasePreset& cp = preset("decoupled");
  const InitialValueProblem ivp = cp.problem();
  const Trajectory ref = integrate(ivp, {}, std::vector<double>{0.0, 1.0});
  const double ex = cp.initial.x * std::exp(cp.params.a());
  const double ey = cp.initial.y * std::exp(-cp.params.c());
  const double state_err = std::max(std::abs(ref.back().x - ex), std::abs(ref.back().y - ey));

  const SeriesSolution s = build(ivp, 20);
  double coeff_err = 0.0;
  double factorial = 1.0;
  for (int n = 0; n <= 20; ++n) {
    if (n > 0) factorial *= n;
    const double xe = cp.initial.x * std::pow(cp.params.a(), n) / factorial;
    const double ye = cp.initial.y * std::pow(-cp.params.c(), n) / factorial;
    coeff_err = std::max({coeff_err, std::abs(s.x_coeffs()[n] - xe) / std::abs(xe),
                          std::abs(s.y_coeffs()[n] - ye) / std::abs(ye)});
  }
  return {"decoupled: exponential oracle", state_err <= kDecoupledStateTol && coeff_err <= kDecoupledCoeffTol,
          "state error " + num(state_err) + " coefficient error " + num(coeff_err)};
}

template <typename Fn>
CheckResult guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    return {name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  const CasePreset& case_i = preset("case-I");
  const CasePreset& case_v = preset("case-V");
  const SeriesBuilder& build = options.taylor;

  std::vector<CheckResult> out;
  for (const CasePreset* cp : {&case_i, &case_v}) {
    out.push_back(guarded(cp->name + ": first-order coefficients", [&] { return first_order(build, *cp); }));
    out.push_back(guarded(cp->name + ": method equivalence", [&] { return equivalence(build, *cp); }));
  }
  out.push_back(guarded("case-V: conservation", [&] { return conservation(case_v, 50.0); }));
  out.push_back(guarded("case-I: conservation", [&] { return conservation(case_i, 10.0); }));
  out.push_back(guarded("case-V: closure", [&] { return closure(case_v); }));
  for (const CasePreset* cp : {&case_i, &case_v}) {
    for (const int order : options.orders) {
      out.push_back(guarded(cp->name + ": divergence", [&] { return divergence(build, *cp, order); }));
    }
  }
  out.push_back(guarded("case-V: self-intersection", [&] { return crossing(build, case_v); }));
  out.push_back(guarded("case-V: drift", [&] { return drift_gap(build, case_v); }));
  out.push_back(guarded("linearized period", [] { return linear_period(); }));
  out.push_back(guarded("decoupled", [&] { return decoupled(build); }));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) noexcept {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace lvpert
