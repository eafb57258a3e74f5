#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "lvpert/errors.hpp"
#include "lvpert/model.hpp"

using namespace lvpert;

namespace {

const ModelParams kCaseI = ModelParams::make(1.0, 1.0, 0.1, 1.0);
const ModelParams kCaseV = ModelParams::make(1.0, 1.0, 1.0, 1.0);

ModelParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> rate(0.05, 5.0);
  return ModelParams::make(rate(rng), rate(rng), rate(rng), rate(rng));
}

}  // namespace

TEST_CASE("params reject non-positive rates") {
  CHECK_THROWS_AS(ModelParams::make(0.0, 1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ModelParams::make(1.0, -1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ModelParams::make(1.0, 1.0, 1.0, std::nan("")), DomainError);
  CHECK_THROWS_AS(ModelParams::decoupled(1.0, 0.0), DomainError);
  const ModelParams dec = ModelParams::decoupled(2.0, 3.0);
  CHECK(dec.b() == 0.0);
  CHECK(dec.d() == 0.0);
  CHECK_FALSE(dec.coupled());
  CHECK(kCaseI.coupled());
}

TEST_CASE("vector field") {
  const Velocity v = vector_field(kCaseI, {14.0, 18.0});
  CHECK(v.dx == -238.0);
  CHECK(v.dy == 250.2);

  const Velocity origin = vector_field(kCaseI, {0.0, 0.0});
  CHECK(origin.dx == 0.0);
  CHECK(origin.dy == 0.0);

  const Velocity center = vector_field(kCaseV, {1.0, 1.0});
  CHECK(center.dx == 0.0);
  CHECK(center.dy == 0.0);

  CHECK_THROWS_AS(vector_field(kCaseV, {std::numeric_limits<double>::infinity(), 1.0}), NonFiniteError);
}

TEST_CASE("jacobian") {
  const Matrix2 j0 = jacobian(kCaseI, {0.0, 0.0});
  CHECK(j0[0][0] == 1.0);
  CHECK(j0[0][1] == 0.0);
  CHECK(j0[1][0] == 0.0);
  CHECK(j0[1][1] == doctest::Approx(-0.1));

  const Matrix2 jc = jacobian(kCaseV, {1.0, 1.0});
  CHECK(jc[0][0] == 0.0);
  CHECK(jc[0][1] == -1.0);
  CHECK(jc[1][0] == 1.0);
  CHECK(jc[1][1] == 0.0);

  const Matrix2 ji = jacobian(kCaseI, {0.1, 1.0});
  CHECK(ji[0][0] == 0.0);
  CHECK(ji[0][1] == doctest::Approx(-0.1));
  CHECK(ji[1][0] == 1.0);
  CHECK(std::abs(ji[1][1]) < 1e-16);

  CHECK_THROWS_AS(jacobian(kCaseV, {1.0, std::nan("")}), NonFiniteError);
}

TEST_CASE("fixed points of case I") {
  const auto fps = fixed_points(kCaseI);
  REQUIRE(fps.size() == 2);
  CHECK(fps[0].kind == FixedPointKind::Saddle);
  CHECK(fps[0].location == PopulationState{0.0, 0.0});
  CHECK(fps[0].eigenvalues[0].real() == 1.0);
  CHECK(fps[0].eigenvalues[1].real() == doctest::Approx(-0.1).epsilon(1e-15));

  CHECK(fps[1].kind == FixedPointKind::Center);
  CHECK(fps[1].location.x == doctest::Approx(0.1));
  CHECK(fps[1].location.y == 1.0);
  CHECK(std::abs(fps[1].eigenvalues[0].real()) < 1e-12);
  CHECK(std::abs(fps[1].eigenvalues[0].imag()) == doctest::Approx(0.316227766016838).epsilon(1e-12));
}

TEST_CASE("fixed points of case V and (2,1,2,1)") {
  const auto fps = fixed_points(kCaseV);
  CHECK(fps[0].eigenvalues[0].real() == 1.0);
  CHECK(fps[0].eigenvalues[1].real() == -1.0);
  CHECK(fps[1].location == PopulationState{1.0, 1.0});
  CHECK(std::abs(fps[1].eigenvalues[0].imag()) == 1.0);

  const auto other = fixed_points(ModelParams::make(2.0, 1.0, 2.0, 1.0));
  CHECK(other[1].location == PopulationState{2.0, 2.0});
  CHECK(std::abs(other[1].eigenvalues[0].imag()) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(other[1].eigenvalues[0] == std::conj(other[1].eigenvalues[1]));
}

TEST_CASE("fixed points of decoupled params are rejected") {
  CHECK_THROWS_AS(fixed_points(ModelParams::decoupled(1.0, 1.0)), DomainError);
}

TEST_CASE("property: fixed points are zeros of the field with the right spectrum") {
  std::mt19937_64 rng(20240607);
  for (int trial = 0; trial < 500; ++trial) {
    const ModelParams p = random_params(rng);
    const auto fps = fixed_points(p);
    REQUIRE(fps.size() == 2);
    for (const FixedPointReport& fp : fps) {
      const Velocity v = vector_field(p, fp.location);
      const double scale = 1e-15 * (1.0 + p.a() * fp.location.x + p.c() * fp.location.y);
      CHECK(std::abs(v.dx) <= scale);
      CHECK(std::abs(v.dy) <= scale);
    }
    const auto& saddle = fps[0].eigenvalues;
    CHECK(saddle[0].imag() == 0.0);
    CHECK(saddle[0].real() * saddle[1].real() < 0.0);
    const auto& center = fps[1].eigenvalues;
    const double omega = std::sqrt(p.a() * p.c());
    CHECK(std::abs(center[0].real()) <= 1e-12);
    CHECK(std::abs(center[0].imag() - omega) <= 1e-12 * std::max(1.0, omega));
    CHECK(std::abs(center[1].imag() + omega) <= 1e-12 * std::max(1.0, omega));
  }
}

TEST_CASE("conserved quantity") {
  CHECK(conserved_quantity(kCaseV, {3.0, 2.0}) == doctest::Approx(-3.208240530771945).epsilon(1e-15));
  CHECK(conserved_quantity(kCaseV, {1.0, 1.0}) == -2.0);
  // 0.1 ln 14 + ln 18 - 32, evaluated symbolically.
  CHECK(conserved_quantity(kCaseI, {14.0, 18.0}) == doctest::Approx(-28.84572250914231).epsilon(1e-15));

  CHECK_THROWS_AS(conserved_quantity(kCaseV, {0.0, 1.0}), DomainError);
  CHECK_THROWS_AS(conserved_quantity(kCaseV, {1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(conserved_quantity(kCaseV, {std::nan(""), 1.0}), NonFiniteError);
}

TEST_CASE("invariant residual") {
  CHECK(invariant_residual(kCaseI, {3.0, 2.0}, {3.0, 2.0}) == 0.0);
  CHECK(invariant_residual(kCaseV, {2.0, 1.0}, {3.0, 2.0}) == doctest::Approx(0.9013877113318903).epsilon(1e-14));
  CHECK_THROWS_AS(invariant_residual(kCaseV, {2.0, 1.0}, {0.0, 2.0}), DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pop(1e-3, 1e3);
  for (int trial = 0; trial < 200; ++trial) {
    const ModelParams p = random_params(rng);
    const PopulationState s{pop(rng), pop(rng)};
    CHECK(invariant_residual(p, s, s) == 0.0);
  }
}

TEST_CASE("property: the conserved quantity is constant along the flow") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> log_pop(-4.0, 4.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const ModelParams p = random_params(rng);
    const PopulationState s{std::exp(log_pop(rng)), std::exp(log_pop(rng))};
    const Velocity f = vector_field(p, s);
    const double gx = p.c() / s.x - p.d();
    const double gy = p.a() / s.y - p.b();
    CHECK(std::abs(gx * f.dx + gy * f.dy) <= 1e-12 * (1.0 + std::hypot(f.dx, f.dy)));
  }
}
