#include "lvpert/methods.hpp"

#include <algorithm>
#include <cmath>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

void require_order(int order) {
  if (order < 0) throw ArgumentError("order must be >= 0");
}

Monomial multiply(Monomial lhs, Monomial rhs) { return {lhs.coeff * rhs.coeff, lhs.degree + rhs.degree}; }

/// A_n for N(x, y) = x y. Expanding N(sum l^k u_k, sum l^k v_k) in the
/// bookkeeping parameter l, the coefficient of l^n is sum_k u_k v_{n-k}.
Monomial adomian_polynomial(const std::vector<AdomianComponent>& comps, std::size_t n) {
  Monomial acc{0.0, n};
  for (std::size_t k = 0; k <= n; ++k) {
    const Monomial term = multiply(comps[k].u, comps[n - k].v);
    acc.coeff += term.coeff;
  }
  return acc;
}

Monomial integrate(Monomial m) {
  return {m.coeff / static_cast<double>(m.degree + 1), m.degree + 1};
}

SeriesSolution collect(const std::vector<PolynomialPair>& terms, std::size_t order) {
  Polynomial x;
  Polynomial y;
  for (const PolynomialPair& term : terms) {
    x += term.x;
    y += term.y;
  }
  std::vector<double> xc(order + 1);
  std::vector<double> yc(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    xc[n] = x.coeff(n);
    yc[n] = y.coeff(n);
  }
  return SeriesSolution(std::move(xc), std::move(yc));
}

}  // namespace

std::string_view to_string(MethodKind kind) noexcept {
  switch (kind) {
    case MethodKind::Taylor:
      return "taylor";
    case MethodKind::Adomian:
      return "adomian";
    case MethodKind::HPM:
      return "hpm";
    case MethodKind::VIM:
      return "vim";
  }
  return "unknown";
}

std::optional<MethodKind> parse_method(std::string_view name) noexcept {
  for (const MethodKind kind : kAllMethods) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::vector<AdomianComponent> adomian_components(const InitialValueProblem& ivp, int order) {
  require_order(order);
  const ModelParams& p = ivp.params();
  std::vector<AdomianComponent> comps;
  comps.reserve(static_cast<std::size_t>(order) + 1);
  comps.push_back({{ivp.initial().x, 0}, {ivp.initial().y, 0}, {}});
  for (std::size_t n = 0;; ++n) {
    comps[n].nonlinear = adomian_polynomial(comps, n);
    if (n == static_cast<std::size_t>(order)) break;
    const Monomial& u = comps[n].u;
    const Monomial& v = comps[n].v;
    const Monomial& an = comps[n].nonlinear;
    const Monomial du{p.a() * u.coeff - p.b() * an.coeff, n};
    const Monomial dv{-p.c() * v.coeff + p.d() * an.coeff, n};
    comps.push_back({integrate(du), integrate(dv), {}});
  }
  return comps;
}

SeriesSolution adomian_series(const InitialValueProblem& ivp, int order) {
  const auto comps = adomian_components(ivp, order);
  std::vector<PolynomialPair> terms;
  terms.reserve(comps.size());
  for (const AdomianComponent& c : comps) {
    terms.push_back({Polynomial::monomial(c.u.coeff, c.u.degree), Polynomial::monomial(c.v.coeff, c.v.degree)});
  }
  return collect(terms, static_cast<std::size_t>(order));
}

std::vector<PolynomialPair> hpm_components(const InitialValueProblem& ivp, int order) {
  require_order(order);
  const ModelParams& p = ivp.params();
  std::vector<PolynomialPair> terms;
  terms.reserve(static_cast<std::size_t>(order) + 1);
  terms.push_back({Polynomial::constant(ivp.initial().x), Polynomial::constant(ivp.initial().y)});
  for (std::size_t n = 0; n < static_cast<std::size_t>(order); ++n) {
    Polynomial coupling;
    for (std::size_t k = 0; k <= n; ++k) coupling += terms[k].x * terms[n - k].y;
    Polynomial rhs_x = p.a() * terms[n].x - p.b() * coupling;
    Polynomial rhs_y = p.d() * coupling - p.c() * terms[n].y;
    terms.push_back({rhs_x.integral(), rhs_y.integral()});
  }
  return terms;
}

SeriesSolution hpm_series(const InitialValueProblem& ivp, int order) {
  return collect(hpm_components(ivp, order), static_cast<std::size_t>(order));
}

std::size_t vim_degree_cap(int iteration) noexcept {
  return std::min(2 * static_cast<std::size_t>(std::max(iteration, 0)), kVimDegreeCeiling);
}

IterateSequence vim_iterates(const InitialValueProblem& ivp, int iterations) {
  require_order(iterations);
  const ModelParams& p = ivp.params();
  IterateSequence seq{MethodKind::VIM, {}};
  seq.iterates.reserve(static_cast<std::size_t>(iterations) + 1);
  seq.iterates.push_back({Polynomial::constant(ivp.initial().x), Polynomial::constant(ivp.initial().y)});
  for (int k = 0; k < iterations; ++k) {
    const PolynomialPair& cur = seq.iterates.back();
    const std::size_t cap = vim_degree_cap(k + 1);
    const Polynomial xy = multiply_truncated(cur.x, cur.y, cap);
    // Residuals of the two equations for the current iterate.
    const Polynomial res_x = cur.x.derivative() - p.a() * cur.x + p.b() * xy;
    const Polynomial res_y = cur.y.derivative() + p.c() * cur.y - p.d() * xy;
    PolynomialPair next{(cur.x - res_x.integral()).truncated(cap), (cur.y - res_y.integral()).truncated(cap)};
    seq.iterates.push_back(std::move(next));
  }
  return seq;
}

SeriesSolution vim_series(const InitialValueProblem& ivp, int order) {
  const IterateSequence seq = vim_iterates(ivp, order);
  return collect({seq.iterates.back()}, static_cast<std::size_t>(order));
}

double AgreementReport::worst() const noexcept { return std::max({adomian, hpm, vim}); }

double max_relative_deviation(const SeriesSolution& candidate, const SeriesSolution& reference) {
  if (candidate.order() != reference.order()) {
    throw ArgumentError("series orders differ");
  }
  double worst = 0.0;
  for (std::size_t n = 0; n <= reference.order(); ++n) {
    const double rx = reference.x_coeffs()[n];
    const double ry = reference.y_coeffs()[n];
    worst = std::max(worst, std::abs(candidate.x_coeffs()[n] - rx) / (1.0 + std::abs(rx)));
    worst = std::max(worst, std::abs(candidate.y_coeffs()[n] - ry) / (1.0 + std::abs(ry)));
  }
  return worst;
}

AgreementReport methods_agree(const InitialValueProblem& ivp, int order) {
  if (order < 1) throw ArgumentError("methods_agree needs order >= 1");
  const SeriesSolution taylor = taylor_coefficients(ivp, order);
  return {max_relative_deviation(adomian_series(ivp, order), taylor),
          max_relative_deviation(hpm_series(ivp, order), taylor),
          max_relative_deviation(vim_series(ivp, order), taylor)};
}

PolynomialPair to_polynomials(const SeriesSolution& s) {
  return {Polynomial(std::vector<double>(s.x_coeffs().begin(), s.x_coeffs().end())),
          Polynomial(std::vector<double>(s.y_coeffs().begin(), s.y_coeffs().end()))};
}

PolynomialPair approximant(const InitialValueProblem& ivp, MethodKind method, int order) {
  switch (method) {
    case MethodKind::Taylor:
      return to_polynomials(taylor_coefficients(ivp, order));
    case MethodKind::Adomian:
      return to_polynomials(adomian_series(ivp, order));
    case MethodKind::HPM:
      return to_polynomials(hpm_series(ivp, order));
    case MethodKind::VIM:
      return vim_iterates(ivp, order).iterates.back();
  }
  throw ArgumentError("unknown method");
}

}  // namespace lvpert
