#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dmeans/catalog.hpp"
#include "dmeans/errors.hpp"
#include "dmeans/transforms.hpp"

using namespace dmeans;

namespace {
constexpr double kPi = std::numbers::pi;

FunctionalsPtr uniform_f() {
  return make_functionals(make_uniform01(), {}, phi_uniform, psi_uniform);
}
FunctionalsPtr w_f() {
  return make_functionals(make_exp_ratio(), {}, phi_exp_ratio, psi_exp_ratio);
}
}  // namespace

TEST_CASE("scaled density against closed forms") {
  CHECK(scaled_mean_density(*w_f(), 1.0, 1.0) == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  const auto F = uniform_f();
  for (double sigma : {0.25, 0.5, 1.0}) {
    for (double x : {0.01, 0.5, 0.99}) {
      CHECK(scaled_mean_density(*F, sigma, x) ==
            doctest::Approx(dk_component_density(sigma, x)).epsilon(1e-9));
    }
  }
  CHECK(scaled_mean_density(*F, 0.5, 1.5) == 0.0);
  CHECK_THROWS_AS(scaled_mean_density(*F, 1.5, 0.5), DomainError);
}

TEST_CASE("integral identity residual") {
  const auto F = uniform_f();
  CHECK(std::abs(integral_identity_check(*F, 1.0, 0.3)) < 1e-10);
  CHECK(std::abs(integral_identity_check(*F, 0.5, 0.3)) < 1e-6);
}

TEST_CASE("GGC of a point mass is a gamma law") {
  const auto F = make_functionals(make_point_mass(2.0));
  for (double x : {0.1, 1.0, 4.0}) {
    const double expect = std::pow(x / 2.0, -0.5) * std::exp(-x / 2.0) /
                          (2.0 * std::tgamma(0.5));
    CHECK(ggc_component_density(*F, 0.5, x) == doctest::Approx(expect).epsilon(1e-12));
  }
  const GgcLaw g(0.5, make_point_mass(2.0));
  CHECK(g.laplace(1.0) == doctest::Approx(std::pow(3.0, -0.5)).epsilon(1e-12));
}

TEST_CASE("GGC mixture density") {
  const auto F = uniform_f();
  const GgcLaw g(1.0, F);
  // G_1 M_1(F_U); the density at 0+ is lim lambda exp(-psi(lambda)) = e.
  CHECK(g.density(1.0) == doctest::Approx(0.237467827667004221).epsilon(1e-9));
  CHECK(ggc_component_density(*F, 1.0, 1e-300) ==
        doctest::Approx(std::numbers::e).epsilon(1e-9));
  const double mass = integrate([&](double x) { return g.density(x); }, 0.0, kInf, F->quad()).value;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(GgcLaw(2.0, F).density(1.0), ContractError);
}

TEST_CASE("tilting") {
  CHECK(tilt_forward_location(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(tilt_forward_location(0.0, 3.0) == 0.0);
  CHECK_THROWS_AS(tilt_forward_location(1.0, 0.0), DomainError);
  const auto pm = make_functionals(make_point_mass(1.0));
  CHECK_THROWS_AS(tilt_forward_density(*pm, 1.0, 1.0, [](double) { return 1.0; }, 0.5),
                  ContractError);

  // W tilted by c = 1 is uniform, so the forward map sends M_1(W) to M_1(U).
  const auto W = w_f();
  const RealFn xi = [](double x) { return w_mean_density(x); };
  for (double y : {0.1, 0.5, 0.9}) {
    const double fwd = tilt_forward_density(*W, 1.0, 1.0, xi, y);
    CHECK(fwd == doctest::Approx(dk_mean_density(y)).epsilon(1e-9));
  }
  // Round trip through the inverse map.
  const RealFn back = [&](double y) { return tilt_forward_density(*W, 1.0, 1.0, xi, y); };
  for (double x : {0.2, 1.0, 5.0}) {
    CHECK(tilt_inverse_density(*W, 1.0, back, x) ==
          doctest::Approx(w_mean_density(x)).epsilon(1e-9));
  }
}

TEST_CASE("phi of the tilted base") {
  const auto W = w_f();
  for (double c : {0.5, 2.0}) {
    for (double y : {0.2, 0.7}) {
      CHECK(phi_tilt(*W, c, y) == doctest::Approx(phi_tilt_exp_ratio(c, y)).epsilon(1e-10));
      CHECK(phi_tilt(*W, c, y) ==
            doctest::Approx(phi(tilt_base(make_exp_ratio(), c), y)).epsilon(1e-8));
    }
  }
}

TEST_CASE("tilted GGC integrates to one") {
  const GgcLaw g(0.5, uniform_f());
  const double mass =
      integrate([&](double t) { return tilted_ggc_density(g, 1.0, t); }, 0.0, kInf, {}).value;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("scaled tilted density integrates to one") {
  const auto F = uniform_f();
  const double mass = integrate(
      [&](double y) { return y > 0.0 && y < 1.0 ? scaled_tilted_density(*F, 0.5, 2.0, y) : 0.0; },
      0.0, 1.0, {}).value;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("beta scale identity parameters") {
  const BetaScalePair p = beta_scale_identity(make_uniform01(), 2.0, 0.25);
  CHECK(p.beta_a == doctest::Approx(0.5));
  CHECK(p.beta_b == doctest::Approx(1.5));
  CHECK_THROWS_AS(beta_scale_identity(make_uniform01(), 2.0, 0.0), DomainError);
}
