#include "lvpert/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

constexpr double kCenterRealPartTol = 1e-12;

void require_finite(PopulationState s, const char* where) {
  if (!std::isfinite(s.x) || !std::isfinite(s.y)) {
    throw NonFiniteError(std::string(where) + ": state has a non-finite component");
  }
}

bool positive_rate(double v) { return std::isfinite(v) && v > 0.0; }

FixedPointKind classify(const std::array<std::complex<double>, 2>& ev) {
  const bool real_pair = ev[0].imag() == 0.0 && ev[1].imag() == 0.0;
  if (real_pair && ev[0].real() * ev[1].real() < 0.0) {
    return FixedPointKind::Saddle;
  }
  if (!real_pair && std::abs(ev[0].real()) < kCenterRealPartTol &&
      std::abs(ev[1].real()) < kCenterRealPartTol) {
    return FixedPointKind::Center;
  }
  throw NumericError("fixed point is neither a saddle nor a center");
}

}  // namespace

ModelParams ModelParams::make(double a, double b, double c, double d) {
  if (!positive_rate(a) || !positive_rate(b) || !positive_rate(c) || !positive_rate(d)) {
    throw DomainError("model rates a, b, c, d must be finite and strictly positive");
  }
  return ModelParams(a, b, c, d);
}

ModelParams ModelParams::decoupled(double a, double c) {
  if (!positive_rate(a) || !positive_rate(c)) {
    throw DomainError("decoupled model rates a, c must be finite and strictly positive");
  }
  return ModelParams(a, 0.0, c, 0.0);
}

std::string_view to_string(FixedPointKind kind) noexcept {
  switch (kind) {
    case FixedPointKind::Saddle:
      return "saddle";
    case FixedPointKind::Center:
      return "center";
  }
  return "unknown";
}

Velocity vector_field(const ModelParams& p, PopulationState s) {
  require_finite(s, "vector_field");
  const double xy = s.x * s.y;
  return {p.a() * s.x - p.b() * xy, p.d() * xy - p.c() * s.y};
}

Matrix2 jacobian(const ModelParams& p, PopulationState s) {
  require_finite(s, "jacobian");
  return {{{p.a() - p.b() * s.y, -p.b() * s.x}, {p.d() * s.y, p.d() * s.x - p.c()}}};
}

std::array<std::complex<double>, 2> eigenvalues(const Matrix2& m) {
  const double half_trace = 0.5 * (m[0][0] + m[1][1]);
  const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  const double disc = half_trace * half_trace - det;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Larger-magnitude root first, the other from det to avoid cancellation.
    const double big = half_trace >= 0.0 ? half_trace + root : half_trace - root;
    const double small = big != 0.0 ? det / big : 0.0;
    return {std::complex<double>(std::max(big, small), 0.0),
            std::complex<double>(std::min(big, small), 0.0)};
  }
  const double root = std::sqrt(-disc);
  return {std::complex<double>(half_trace, root), std::complex<double>(half_trace, -root)};
}

std::vector<FixedPointReport> fixed_points(const ModelParams& p) {
  if (!p.coupled()) {
    throw DomainError("decoupled model has no interior center");
  }
  std::vector<FixedPointReport> out;
  out.reserve(2);
  for (const PopulationState s : {PopulationState{0.0, 0.0}, PopulationState{p.c() / p.d(), p.a() / p.b()}}) {
    const auto ev = eigenvalues(jacobian(p, s));
    out.push_back({s, classify(ev), ev});
  }
  return out;
}

double conserved_quantity(const ModelParams& p, PopulationState s) {
  require_finite(s, "conserved_quantity");
  if (s.x <= 0.0 || s.y <= 0.0) {
    throw DomainError("conserved_quantity: populations must be strictly positive");
  }
  return p.c() * std::log(s.x) + p.a() * std::log(s.y) - p.d() * s.x - p.b() * s.y;
}

double invariant_residual(const ModelParams& p, PopulationState s, PopulationState s0) {
  return conserved_quantity(p, s) - conserved_quantity(p, s0);
}

}  // namespace lvpert
