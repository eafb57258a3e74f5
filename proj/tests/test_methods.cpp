#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lvpert/errors.hpp"
#include "lvpert/methods.hpp"

using namespace lvpert;

namespace {

InitialValueProblem case_i() { return {ModelParams::make(1.0, 1.0, 0.1, 1.0), {14.0, 18.0}, 10.0}; }
InitialValueProblem case_v() { return {ModelParams::make(1.0, 1.0, 1.0, 1.0), {3.0, 2.0}, 10.0}; }
InitialValueProblem decoupled() { return {ModelParams::decoupled(1.0, 1.0), {1.0, 1.0}, 1.0}; }

double rel(double got, double want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

InitialValueProblem random_ivp(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.1, 2.0);
  std::uniform_real_distribution<double> pop(0.1, 10.0);
  return {ModelParams::make(rate(rng), rate(rng), rate(rng), rate(rng)), {pop(rng), pop(rng)}, 1.0};
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial p{1.0, 2.0, 3.0};
  const Polynomial q{0.0, 1.0};
  CHECK(p(2.0) == 17.0);
  CHECK((p * q).degree() == 3);
  CHECK((p * q).coeff(3) == 3.0);
  CHECK(p.derivative().coeff(1) == 6.0);
  CHECK(p.integral().coeff(0) == 0.0);
  CHECK(p.integral().coeff(3) == 1.0);
  CHECK(p.integral().derivative().coeff(2) == 3.0);
  CHECK(p.truncated(1).degree() == 1);
  CHECK(multiply_truncated(p, p, 2).degree() == 2);
  CHECK(multiply_truncated(p, p, 2).coeff(2) == (p * p).coeff(2));
}

TEST_CASE("method names") {
  for (const MethodKind m : kAllMethods) CHECK(parse_method(to_string(m)) == m);
  CHECK_FALSE(parse_method("picard").has_value());
}

TEST_CASE("adomian components are single monomials matching Taylor") {
  const auto ivp = case_v();
  const auto comps = adomian_components(ivp, 12);
  const SeriesSolution taylor = taylor_coefficients(ivp, 12);
  REQUIRE(comps.size() == 13);
  for (std::size_t n = 0; n < comps.size(); ++n) {
    CHECK(comps[n].u.degree == n);
    CHECK(comps[n].v.degree == n);
    CHECK(comps[n].nonlinear.degree == n);
    CHECK(rel(comps[n].u.coeff, taylor.x_coeffs()[n]) <= 1e-12);
    CHECK(rel(comps[n].v.coeff, taylor.y_coeffs()[n]) <= 1e-12);
  }
  // A_0 = x0 y0 and A_1 = X0 Y1 + X1 Y0.
  CHECK(comps[0].nonlinear.coeff == 6.0);
  CHECK(comps[1].nonlinear.coeff == 3.0 * 4.0 + (-3.0) * 2.0);
}

TEST_CASE("adomian series") {
  const SeriesSolution s = adomian_series(case_v(), 2);
  CHECK(std::vector<double>(s.x_coeffs().begin(), s.x_coeffs().end()) == std::vector<double>{3.0, -3.0, -4.5});
  CHECK(std::vector<double>(s.y_coeffs().begin(), s.y_coeffs().end()) == std::vector<double>{2.0, 4.0, 1.0});

  const SeriesSolution d = adomian_series(decoupled(), 5);
  double fact = 1.0;
  for (std::size_t n = 0; n <= 5; ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    CHECK(d.x_coeffs()[n] == doctest::Approx(1.0 / fact).epsilon(1e-15));
    CHECK(d.y_coeffs()[n] == doctest::Approx((n % 2 ? -1.0 : 1.0) / fact).epsilon(1e-15));
  }
}

TEST_CASE("hpm series") {
  const SeriesSolution s1 = hpm_series(case_i(), 1);
  CHECK(s1.x_coeffs()[1] == -238.0);
  CHECK(s1.y_coeffs()[1] == 250.2);

  const SeriesSolution s6 = hpm_series(case_v(), 6);
  const SeriesSolution t6 = taylor_coefficients(case_v(), 6);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(rel(s6.x_coeffs()[n], t6.x_coeffs()[n]) <= 1e-12);
    CHECK(rel(s6.y_coeffs()[n], t6.y_coeffs()[n]) <= 1e-12);
  }

  const SeriesSolution s0 = hpm_series(case_v(), 0);
  CHECK(s0.order() == 0);
  CHECK(s0.x_coeffs()[0] == 3.0);
  CHECK(s0.y_coeffs()[0] == 2.0);
}

TEST_CASE("property: each HPM term solves its homotopy equation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const InitialValueProblem ivp = random_ivp(rng);
    const ModelParams& p = ivp.params();
    const auto terms = hpm_components(ivp, 10);
    for (std::size_t n = 1; n < terms.size(); ++n) {
      CHECK(terms[n].x(0.0) == 0.0);
      CHECK(terms[n].y(0.0) == 0.0);
      Polynomial coupling;
      for (std::size_t k = 0; k < n; ++k) coupling += terms[k].x * terms[n - 1 - k].y;
      const Polynomial res_x = terms[n].x.derivative() - (p.a() * terms[n - 1].x - p.b() * coupling);
      const Polynomial res_y = terms[n].y.derivative() - (p.d() * coupling - p.c() * terms[n - 1].y);
      for (std::size_t k = 0; k <= res_x.degree(); ++k) {
        const double scale = 1.0 + std::abs(terms[n].x.derivative().coeff(k));
        CHECK(std::abs(res_x.coeff(k)) <= 1e-12 * scale);
      }
      for (std::size_t k = 0; k <= res_y.degree(); ++k) {
        const double scale = 1.0 + std::abs(terms[n].y.derivative().coeff(k));
        CHECK(std::abs(res_y.coeff(k)) <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("vim iterates") {
  const IterateSequence zero = vim_iterates(case_v(), 0);
  REQUIRE(zero.iterates.size() == 1);
  CHECK(zero.iterates[0].x.degree() == 0);
  CHECK(zero.iterates[0].x.coeff(0) == 3.0);
  CHECK(zero.iterates[0].y.coeff(0) == 2.0);

  const IterateSequence one = vim_iterates(case_v(), 1);
  REQUIRE(one.iterates.size() == 2);
  CHECK(one.method == MethodKind::VIM);
  CHECK(one.iterates[1].x.coeff(0) == 3.0);
  CHECK(one.iterates[1].x.coeff(1) == -3.0);
  CHECK(one.iterates[1].y.coeff(0) == 2.0);
  CHECK(one.iterates[1].y.coeff(1) == 4.0);
  CHECK(one.iterates[1].x.coeff(2) == 0.0);

  const IterateSequence four = vim_iterates(case_v(), 4);
  const SeriesSolution t4 = taylor_coefficients(case_v(), 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(rel(four.iterates[4].x.coeff(n), t4.x_coeffs()[n]) <= 1e-12);
    CHECK(rel(four.iterates[4].y.coeff(n), t4.y_coeffs()[n]) <= 1e-12);
  }
  // Beyond order k the iterate carries extra terms.
  CHECK(four.iterates[4].x.degree() > 4);
  CHECK(four.iterates[4].x.degree() <= vim_degree_cap(4));
}

TEST_CASE("vim degree cap") {
  CHECK(vim_degree_cap(0) == 0);
  CHECK(vim_degree_cap(3) == 6);
  CHECK(vim_degree_cap(40) == 64);
  const IterateSequence seq = vim_iterates(case_v(), 40);
  for (std::size_t k = 0; k < seq.iterates.size(); ++k) {
    CHECK(seq.iterates[k].x.degree() <= vim_degree_cap(static_cast<int>(k)));
  }
}

TEST_CASE("property: VIM iterate k agrees with Taylor through order k") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const InitialValueProblem ivp = random_ivp(rng);
    const IterateSequence seq = vim_iterates(ivp, 12);
    const SeriesSolution taylor = taylor_coefficients(ivp, 12);
    for (std::size_t k = 0; k < seq.iterates.size(); ++k) {
      for (std::size_t n = 0; n <= k; ++n) {
        CHECK(rel(seq.iterates[k].x.coeff(n), taylor.x_coeffs()[n]) <= 1e-12);
        CHECK(rel(seq.iterates[k].y.coeff(n), taylor.y_coeffs()[n]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("methods agree with the time series") {
  const AgreementReport v = methods_agree(case_v(), 10);
  CHECK(v.adomian <= 1e-12);
  CHECK(v.hpm <= 1e-12);
  CHECK(v.vim <= 1e-12);

  const AgreementReport i = methods_agree(case_i(), 10);
  CHECK(i.worst() <= 1e-10);

  const AgreementReport d = methods_agree(decoupled(), 10);
  CHECK(d.worst() <= 1e-14);

  CHECK_THROWS_AS(methods_agree(case_v(), 0), ArgumentError);
}

TEST_CASE("every approximant starts at the initial state") {
  for (const auto& ivp : {case_i(), case_v(), decoupled()}) {
    for (const MethodKind m : kAllMethods) {
      for (const int order : {0, 1, 5, 10}) {
        const PolynomialPair pp = approximant(ivp, m, order);
        CHECK(pp.x(0.0) == ivp.initial().x);
        CHECK(pp.y(0.0) == ivp.initial().y);
      }
    }
  }
}
