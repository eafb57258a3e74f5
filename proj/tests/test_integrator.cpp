#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "lvpert/errors.hpp"
#include "lvpert/integrator.hpp"

using namespace lvpert;

namespace {

const ModelParams kCaseIParams = ModelParams::make(1.0, 1.0, 0.1, 1.0);
const ModelParams kCaseVParams = ModelParams::make(1.0, 1.0, 1.0, 1.0);

InitialValueProblem case_i(double t_end = 10.0) { return {kCaseIParams, {14.0, 18.0}, t_end}; }
InitialValueProblem case_v(double t_end = 10.0) { return {kCaseVParams, {3.0, 2.0}, t_end}; }

// First return time of the case V orbit: DOP853 (scipy) on ln x, ln y with
// rtol = atol = 1e-13, event y = y0 crossed upwards.
constexpr double kCaseVPeriodOracle = 7.603020304425149;

}  // namespace

TEST_CASE("config validation") {
  IntegratorConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = {};
  cfg.abs_tol = 1.0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = {};
  cfg.max_step = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = {};
  cfg.initial_step = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
}

TEST_CASE("decoupled exponentials") {
  const InitialValueProblem ivp(ModelParams::decoupled(1.0, 1.0), {1.0, 1.0}, 1.0);
  const Trajectory t = integrate(ivp, {}, std::vector<double>{0.0, 0.5, 1.0});
  CHECK(std::abs(t.back().x - std::numbers::e) <= 1e-9);
  CHECK(std::abs(t.back().y - 1.0 / std::numbers::e) <= 1e-9);
}

TEST_CASE("initial sample is exact") {
  const Trajectory t = integrate(case_v(), {}, linspace(0.0, 1.0, 11));
  CHECK(t[0].x == 3.0);
  CHECK(t[0].y == 2.0);
  const Trajectory single = integrate(case_v(), {}, std::vector<double>{0.0});
  REQUIRE(single.size() == 1);
  CHECK(single[0].x == 3.0);
}

TEST_CASE("grid must lie inside the horizon") {
  CHECK_THROWS_AS(integrate(case_v(1.0), {}, std::vector<double>{0.0, 2.0}), ArgumentError);
  CHECK_THROWS_AS(integrate(case_v(), {}, std::vector<double>{1.0, 0.5}), ArgumentError);
}

TEST_CASE("case V residuals stay below 1e-8 on a dense grid") {
  const Trajectory t = integrate(case_v(20.0), {}, linspace(0.0, 20.0, 4001), true);
  REQUIRE(t.residuals().has_value());
  REQUIRE(t.residuals()->size() == t.size());
  for (const double r : *t.residuals()) CHECK(std::abs(r) <= 1e-8);
}

TEST_CASE("case V conservation over [0, 50]") {
  const Trajectory t = integrate(case_v(50.0), {}, linspace(0.0, 50.0, 5001), true);
  double worst = 0.0;
  for (const double r : *t.residuals()) worst = std::max(worst, std::abs(r));
  CHECK(worst <= 1e-8);
}

TEST_CASE("case I stays positive and conserves") {
  const Trajectory t = integrate(case_i(), {}, linspace(0.0, 10.0, 2001), true);
  double worst = 0.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    CHECK(t[k].x > 0.0);
    CHECK(t[k].y > 0.0);
    worst = std::max(worst, std::abs((*t.residuals())[k]));
  }
  CHECK(worst <= 1e-8);
  // The prey population collapses by ~80 orders of magnitude.
  CHECK(t.back().x < 1e-80);
}

TEST_CASE("tightening the tolerance reduces the end-point error") {
  const std::vector<double> grid{0.0, 10.0};
  IntegratorConfig oracle_cfg;
  oracle_cfg.rel_tol = 1e-13;
  oracle_cfg.abs_tol = 1e-15;
  const Sample oracle = integrate(case_v(), oracle_cfg, grid).back();

  double previous = std::numeric_limits<double>::infinity();
  for (const double tol : {1e-6, 1e-7, 1e-8, 1e-9}) {
    IntegratorConfig cfg;
    cfg.rel_tol = tol;
    cfg.abs_tol = tol * 1e-2;
    const Sample s = integrate(case_v(), cfg, grid).back();
    const double err = std::hypot(s.x - oracle.x, s.y - oracle.y);
    CHECK(err < previous);
    previous = err;
  }
}

TEST_CASE("dense output matches runs that stop on the sample times") {
  const auto grid = linspace(0.0, 10.0, 41);
  const IntegratorConfig cfg;
  const Trajectory dense = integrate(case_v(), cfg, grid);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const Sample boundary = integrate_steps(case_v(grid[k]), cfg).back();
    CHECK(boundary.t == grid[k]);
    const double rel_x = std::abs(dense[k].x - boundary.x) / std::abs(boundary.x);
    const double rel_y = std::abs(dense[k].y - boundary.y) / std::abs(boundary.y);
    CHECK(rel_x <= 10.0 * (cfg.rel_tol + cfg.abs_tol) * static_cast<double>(k));
    CHECK(rel_y <= 10.0 * (cfg.rel_tol + cfg.abs_tol) * static_cast<double>(k));
  }
}

TEST_CASE("zero populations stay on the axes") {
  const InitialValueProblem no_prey(kCaseVParams, {0.0, 2.0}, 2.0);
  const Trajectory t = integrate(no_prey, {}, std::vector<double>{0.0, 1.0, 2.0});
  CHECK(t[2].x == 0.0);
  CHECK(t[2].y == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(integrate(no_prey, {}, std::vector<double>{0.0, 1.0}, true), DomainError);

  const InitialValueProblem origin(kCaseVParams, {0.0, 0.0}, 1.0);
  const Trajectory o = integrate(origin, {}, std::vector<double>{0.0, 1.0});
  CHECK(o[1].x == 0.0);
  CHECK(o[1].y == 0.0);
}

TEST_CASE("numeric failures") {
  IntegratorConfig cfg;
  cfg.initial_step = 1e-20;
  CHECK_THROWS_AS(integrate(case_v(1.0), cfg, std::vector<double>{0.0, 1.0}), StepSizeUnderflowError);

  const InitialValueProblem blowup(ModelParams::decoupled(1000.0, 1.0), {1.0, 1.0}, 1.0);
  CHECK_THROWS_AS(integrate(blowup, {}, std::vector<double>{0.0, 1.0}), DivergenceError);
}

TEST_CASE("period near the center is the linear period") {
  const InitialValueProblem ivp(kCaseVParams, {1.0 + 1e-4, 1.0}, 1.0);
  CHECK(std::abs(estimate_period(ivp) - 2.0 * std::numbers::pi) <= 1e-3);

  const ModelParams p = ModelParams::make(2.0, 1.0, 0.5, 0.25);
  const InitialValueProblem other(p, {2.0 * (1.0 + 1e-4), 2.0}, 1.0);
  CHECK(std::abs(estimate_period(other) - 2.0 * std::numbers::pi) <= 1e-3);
}

TEST_CASE("case V period against the oracle") {
  const double period = estimate_period(case_v());
  CHECK(period > 2.0 * std::numbers::pi);
  CHECK(period == doctest::Approx(kCaseVPeriodOracle).epsilon(1e-9));

  IntegratorConfig tight;
  tight.rel_tol = 1e-12;
  tight.abs_tol = 1e-14;
  CHECK(std::abs(estimate_period(case_v(), tight) - kCaseVPeriodOracle) <= 1e-9);
}

TEST_CASE("period errors") {
  CHECK_THROWS_AS(estimate_period(InitialValueProblem(kCaseVParams, {1.0, 1.0}, 1.0)), DomainError);
  CHECK_THROWS_AS(estimate_period(InitialValueProblem(kCaseVParams, {0.0, 1.0}, 1.0)), DomainError);
  CHECK_THROWS_AS(estimate_period(InitialValueProblem(ModelParams::decoupled(1.0, 1.0), {1.0, 1.0}, 1.0)),
                  PeriodNotFoundError);
  // The case I orbit takes ~326.8 time units, beyond the 100/sqrt(ac) search window.
  CHECK_THROWS_AS(estimate_period(case_i()), PeriodNotFoundError);
}

TEST_CASE("start on the dy/dt = 0 nullcline uses the x section") {
  const InitialValueProblem ivp(kCaseVParams, {1.0, 2.5}, 1.0);
  const double period = estimate_period(ivp);
  const Trajectory t = integrate(ivp.with_t_end(1.2 * period), {}, linspace(0.0, 1.2 * period, 2001));
  CHECK(return_distance(t, ivp.initial(), period) < 1e-6);
}

TEST_CASE("closed orbit check") {
  const double period = estimate_period(case_v());
  const InitialValueProblem ivp = case_v(1.2 * period);
  const auto grid = linspace(0.0, 1.2 * period, 2001);
  const Trajectory ref = integrate(ivp, {}, grid);
  CHECK(closed_orbit_check(ref, ivp, 1e-6));
  CHECK(closed_orbit_check(ref, ivp.initial(), period, 1e-6));

  const Trajectory series = sample_series(taylor_coefficients(ivp, 10), grid);
  CHECK_FALSE(closed_orbit_check(series, ivp.initial(), period, 1e-6));

  const Trajectory half = integrate(case_v(0.5 * period), {}, linspace(0.0, 0.5 * period, 500));
  CHECK_THROWS_AS(closed_orbit_check(half, ivp.initial(), period, 1e-6), ArgumentError);
}
