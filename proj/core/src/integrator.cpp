#include "lvpert/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

using Vec = std::array<double, 2>;

// Dormand–Prince 5(4) tableau, error weights and dense-output coefficients.
constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                 a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                 a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                 e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

// PI controller.
constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 5.0;
constexpr double kBeta = 0.04;
constexpr double kAlpha = 0.2 - 0.75 * kBeta;

constexpr double kMinStepFraction = 1e-14;
constexpr double kPeriodTimeTol = 1e-10;

/// The model in (ln x, ln y). Components flagged inactive are identically
/// zero populations and are frozen.
struct LogSystem {
  ModelParams params;
  std::array<bool, 2> active;

  Vec rhs(const Vec& z) const {
    const double x = active[0] ? std::exp(z[0]) : 0.0;
    const double y = active[1] ? std::exp(z[1]) : 0.0;
    return {active[0] ? params.a() - params.b() * y : 0.0, active[1] ? params.d() * x - params.c() : 0.0};
  }

  PopulationState state(const Vec& z) const {
    return {active[0] ? std::exp(z[0]) : 0.0, active[1] ? std::exp(z[1]) : 0.0};
  }
};

LogSystem make_system(const InitialValueProblem& ivp) {
  return {ivp.params(), {ivp.initial().x > 0.0, ivp.initial().y > 0.0}};
}

Vec to_log(const InitialValueProblem& ivp) {
  const PopulationState s = ivp.initial();
  return {s.x > 0.0 ? std::log(s.x) : 0.0, s.y > 0.0 ? std::log(s.y) : 0.0};
}

bool finite(const Vec& v) { return std::isfinite(v[0]) && std::isfinite(v[1]); }

class DormandPrince {
 public:
  DormandPrince(LogSystem sys, Vec z0, double t_stop, double min_step, const IntegratorConfig& cfg)
      : sys_(sys), cfg_(cfg), t_stop_(t_stop), min_step_(min_step), z_(z0) {
    f_ = sys_.rhs(z_);
    if (!finite(f_)) throw DivergenceError("non-finite derivative at the initial state");
    h_ = cfg_.initial_step ? *cfg_.initial_step : initial_step();
    h_ = std::min(h_, cfg_.max_step);
  }

  bool done() const noexcept { return t_ >= t_stop_; }
  double t() const noexcept { return t_; }
  double t_prev() const noexcept { return t_prev_; }
  const Vec& z() const noexcept { return z_; }
  const Vec& z_prev() const noexcept { return z_prev_; }

  void step() {
    bool rejected = false;
    for (;;) {
      if (h_ < min_step_) {
        throw StepSizeUnderflowError("step size underflow at t = " + std::to_string(t_));
      }
      bool last = false;
      double h = h_;
      if (t_ + h >= t_stop_ || t_ + 1.01 * h >= t_stop_) {
        h = t_stop_ - t_;
        last = true;
      }

      const Vec& k1 = f_;
      const Vec k2 = sys_.rhs(axpy(h, {a21}, {&k1}));
      const Vec k3 = sys_.rhs(axpy(h, {a31, a32}, {&k1, &k2}));
      const Vec k4 = sys_.rhs(axpy(h, {a41, a42, a43}, {&k1, &k2, &k3}));
      const Vec k5 = sys_.rhs(axpy(h, {a51, a52, a53, a54}, {&k1, &k2, &k3, &k4}));
      const Vec k6 = sys_.rhs(axpy(h, {a61, a62, a63, a64, a65}, {&k1, &k2, &k3, &k4, &k5}));
      const Vec z_new = axpy(h, {a71, 0.0, a73, a74, a75, a76}, {&k1, &k2, &k3, &k4, &k5, &k6});
      const Vec k7 = sys_.rhs(z_new);
      if (!finite(z_new) || !finite(k7)) {
        throw DivergenceError("non-finite state near t = " + std::to_string(t_ + h));
      }

      double err2 = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        // An error in ln x is a relative error in x.
        const double sc = cfg_.abs_tol + cfg_.rel_tol;
        err2 += (e / sc) * (e / sc);
      }
      const double err = std::sqrt(err2 / 2.0);

      if (err <= 1.0) {
        for (int i = 0; i < 2; ++i) {
          const double diff = z_new[i] - z_[i];
          const double bspl = h * k1[i] - diff;
          rcont_[0][i] = z_[i];
          rcont_[1][i] = diff;
          rcont_[2][i] = bspl;
          rcont_[3][i] = diff - h * k7[i] - bspl;
          rcont_[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        }
        t_prev_ = t_;
        z_prev_ = z_;
        h_prev_ = h;
        t_ = last ? t_stop_ : t_ + h;
        z_ = z_new;
        f_ = k7;

        const double e = std::max(err, 1e-10);
        double factor = kSafety * std::pow(e, -kAlpha) * std::pow(err_old_, kBeta);
        factor = std::clamp(factor, kMinFactor, kMaxFactor);
        if (rejected) factor = std::min(factor, 1.0);
        err_old_ = std::max(err, 1e-4);
        // A clipped final step says nothing about the natural step size.
        if (!last) h_ = std::min(h * factor, cfg_.max_step);
        return;
      }
      rejected = true;
      h_ = h * std::max(kMinFactor, kSafety * std::pow(err, -0.2));
    }
  }

  /// Dense output on the last accepted step.
  Vec dense(double t) const {
    const double theta = (t - t_prev_) / h_prev_;
    const double theta1 = 1.0 - theta;
    Vec out{};
    for (int i = 0; i < 2; ++i) {
      out[i] = rcont_[0][i] +
               theta * (rcont_[1][i] + theta1 * (rcont_[2][i] + theta * (rcont_[3][i] + theta1 * rcont_[4][i])));
    }
    return out;
  }

 private:
  Vec axpy(double h, std::initializer_list<double> coeffs, std::initializer_list<const Vec*> ks) const {
    Vec out = z_;
    auto c = coeffs.begin();
    for (const Vec* k : ks) {
      out[0] += h * (*c) * (*k)[0];
      out[1] += h * (*c) * (*k)[1];
      ++c;
    }
    return out;
  }

  double norm(const Vec& v) const {
    double acc = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double sc = cfg_.abs_tol + cfg_.rel_tol;
      acc += (v[i] / sc) * (v[i] / sc);
    }
    return std::sqrt(acc / 2.0);
  }

  // Curvature-based starting step.
  double initial_step() const {
    const double span = t_stop_ > 0.0 ? t_stop_ : 1.0;
    const double dnf = norm(f_);
    const double dny = norm(z_);
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * dny / dnf;
    h = std::min(h, span);
    Vec z1 = z_;
    z1[0] += h * f_[0];
    z1[1] += h * f_[1];
    const Vec f1 = sys_.rhs(z1);
    const Vec df{f1[0] - f_[0], f1[1] - f_[1]};
    const double der2 = norm(df) / h;
    const double der12 = std::max(der2, dnf);
    const double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3) : std::pow(0.01 / der12, 0.2);
    return std::min({100.0 * h, h1, span});
  }

  LogSystem sys_;
  IntegratorConfig cfg_;
  double t_stop_;
  double min_step_;
  double t_ = 0.0;
  double t_prev_ = 0.0;
  double h_ = 0.0;
  double h_prev_ = 0.0;
  double err_old_ = 1e-4;
  Vec z_;
  Vec z_prev_{};
  Vec f_{};
  std::array<Vec, 5> rcont_{};
};

Sample make_sample(double t, const LogSystem& sys, const Vec& z) {
  const PopulationState s = sys.state(z);
  if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
    throw DivergenceError("population overflow at t = " + std::to_string(t));
  }
  return {t, s.x, s.y};
}

Trajectory finish(const InitialValueProblem& ivp, std::vector<Sample> samples, bool record_residuals) {
  if (!record_residuals) return Trajectory(std::move(samples));
  std::vector<double> residuals;
  residuals.reserve(samples.size());
  for (const Sample& s : samples) residuals.push_back(invariant_residual(ivp.params(), s.state(), ivp.initial()));
  return Trajectory(std::move(samples), std::move(residuals));
}

Vec lagrange_cubic(const std::array<Sample, 4>& n, double t) {
  Vec out{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) {
    double w = 1.0;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != i) w *= (t - n[j].t) / (n[i].t - n[j].t);
    }
    out[0] += w * n[i].x;
    out[1] += w * n[i].y;
  }
  return out;
}

double squared_distance(const Vec& p, PopulationState q) {
  const double dx = p[0] - q.x;
  const double dy = p[1] - q.y;
  return dx * dx + dy * dy;
}

/// Golden-section minimum of the squared distance on [lo, hi] along the cubic
/// through the four samples surrounding the interval.
double refine_on_interval(const Trajectory& traj, std::size_t left, double lo, double hi, PopulationState start) {
  const std::size_t first = std::min(left > 0 ? left - 1 : 0, traj.size() - 4);
  const std::array<Sample, 4> nodes{traj[first], traj[first + 1], traj[first + 2], traj[first + 3]};
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = squared_distance(lagrange_cubic(nodes, c), start);
  double fd = squared_distance(lagrange_cubic(nodes, d), start);
  for (int it = 0; it < 200 && (b - a) > 1e-15 * std::max(1.0, std::abs(b)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = squared_distance(lagrange_cubic(nodes, c), start);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = squared_distance(lagrange_cubic(nodes, d), start);
    }
  }
  return std::min({fc, fd, squared_distance(lagrange_cubic(nodes, lo), start),
                   squared_distance(lagrange_cubic(nodes, hi), start)});
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw ArgumentError("rel_tol must lie in (0, 1)");
  if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw ArgumentError("abs_tol must lie in (0, 1)");
  if (!(max_step > 0.0)) throw ArgumentError("max_step must be positive");
  if (initial_step && !(*initial_step > 0.0 && std::isfinite(*initial_step))) {
    throw ArgumentError("initial_step must be positive");
  }
}

Trajectory integrate(const InitialValueProblem& ivp, const IntegratorConfig& cfg, std::span<const double> t_grid,
                     bool record_residuals) {
  cfg.validate();
  validate_grid(t_grid);
  if (t_grid.back() > ivp.t_end()) {
    throw ArgumentError("time grid extends past t_end");
  }
  if (record_residuals && (ivp.initial().x <= 0.0 || ivp.initial().y <= 0.0)) {
    throw DomainError("residual recording needs strictly positive initial populations");
  }

  const LogSystem sys = make_system(ivp);
  std::vector<Sample> samples;
  samples.reserve(t_grid.size());
  std::size_t next = 0;
  while (next < t_grid.size() && t_grid[next] == 0.0) {
    samples.push_back({0.0, ivp.initial().x, ivp.initial().y});
    ++next;
  }
  if (next == t_grid.size()) return finish(ivp, std::move(samples), record_residuals);

  DormandPrince stepper(sys, to_log(ivp), t_grid.back(), kMinStepFraction * ivp.t_end(), cfg);
  while (next < t_grid.size()) {
    stepper.step();
    while (next < t_grid.size() && t_grid[next] <= stepper.t()) {
      const double t = t_grid[next];
      samples.push_back(make_sample(t, sys, t == stepper.t() ? stepper.z() : stepper.dense(t)));
      ++next;
    }
  }
  return finish(ivp, std::move(samples), record_residuals);
}

Trajectory integrate_steps(const InitialValueProblem& ivp, const IntegratorConfig& cfg) {
  cfg.validate();
  const LogSystem sys = make_system(ivp);
  std::vector<Sample> samples{{0.0, ivp.initial().x, ivp.initial().y}};
  DormandPrince stepper(sys, to_log(ivp), ivp.t_end(), kMinStepFraction * ivp.t_end(), cfg);
  while (!stepper.done()) {
    stepper.step();
    samples.push_back(make_sample(stepper.t(), sys, stepper.z()));
  }
  return Trajectory(std::move(samples));
}

double estimate_period(const InitialValueProblem& ivp, const IntegratorConfig& cfg) {
  cfg.validate();
  const ModelParams& p = ivp.params();
  const PopulationState s0 = ivp.initial();
  if (s0.x <= 0.0 || s0.y <= 0.0) {
    throw DomainError("estimate_period needs a strictly positive initial state");
  }
  const Velocity v0 = vector_field(p, s0);
  if (v0.dx == 0.0 && v0.dy == 0.0) {
    throw DomainError("initial state is the center; the orbit is degenerate");
  }
  const int axis = std::abs(v0.dy) >= std::abs(v0.dx) ? 1 : 0;
  const double direction = (axis == 1 ? v0.dy : v0.dx) > 0.0 ? 1.0 : -1.0;

  const LogSystem sys = make_system(ivp);
  const Vec z0 = to_log(ivp);
  const auto section = [&](const Vec& z) { return direction * (z[axis] - z0[axis]); };

  const double horizon = 100.0 / std::sqrt(p.a() * p.c());
  DormandPrince stepper(sys, z0, horizon, kMinStepFraction * horizon, cfg);
  while (!stepper.done()) {
    stepper.step();
    const double g_prev = section(stepper.z_prev());
    const double g_now = section(stepper.z());
    if (!(g_prev < 0.0 && g_now >= 0.0)) continue;
    double lo = stepper.t_prev();
    double hi = stepper.t();
    while (hi - lo > kPeriodTimeTol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (section(stepper.dense(mid)) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  throw PeriodNotFoundError("no return to the section within t = " + std::to_string(horizon));
}

double return_distance(const Trajectory& traj, PopulationState start, double period) {
  if (!(period > 0.0) || !std::isfinite(period)) throw ArgumentError("period must be positive");
  if (traj.size() < 4) throw ArgumentError("trajectory needs at least 4 samples");
  if (traj.back().t < period) {
    throw ArgumentError("trajectory is shorter than one period");
  }
  const double lo = 0.5 * period;
  const double hi = std::min(1.5 * period, traj.back().t);

  std::size_t best = traj.size();
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < traj.size(); ++i) {
    if (traj[i].t < lo || traj[i].t > hi) continue;
    const double d2 = squared_distance({traj[i].x, traj[i].y}, start);
    if (d2 < best_d2) {
      best_d2 = d2;
      best = i;
    }
  }
  if (best == traj.size()) throw ArgumentError("no samples inside the return window");

  if (best > 0 && traj[best - 1].t >= lo) {
    best_d2 = std::min(best_d2, refine_on_interval(traj, best - 1, traj[best - 1].t, traj[best].t, start));
  }
  if (best + 1 < traj.size() && traj[best + 1].t <= hi) {
    best_d2 = std::min(best_d2, refine_on_interval(traj, best, traj[best].t, traj[best + 1].t, start));
  }
  return std::sqrt(best_d2);
}

bool closed_orbit_check(const Trajectory& traj, PopulationState start, double period, double eps) {
  if (!(eps > 0.0)) throw ArgumentError("eps must be positive");
  return return_distance(traj, start, period) < eps;
}

bool closed_orbit_check(const Trajectory& traj, const InitialValueProblem& ivp, double eps) {
  return closed_orbit_check(traj, ivp.initial(), estimate_period(ivp), eps);
}

}  // namespace lvpert
