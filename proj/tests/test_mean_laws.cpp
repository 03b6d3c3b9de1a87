#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dmeans/catalog.hpp"
#include "dmeans/errors.hpp"
#include "dmeans/mean_laws.hpp"

using namespace dmeans;

namespace {

FunctionalsPtr uniform_f() {
  return make_functionals(make_uniform01(), {}, phi_uniform, psi_uniform);
}

}  // namespace

TEST_CASE("theta = 1 on the uniform base") {
  const MeanLaw law(1.0, uniform_f());
  CHECK(mean_cdf(law, 0.25) == doctest::Approx(0.125141410964882147).epsilon(1e-9));
  CHECK(mean_cdf(law, 0.5) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(mean_cdf(law, 0.0) == 0.0);
  for (double x : {0.05, 0.3, 0.5, 0.8, 0.95}) {
    CHECK(mean_density_theta1(law, x) == doctest::Approx(dk_mean_density(x)).epsilon(1e-10));
    CHECK(mean_density(law, x) == doctest::Approx(dk_mean_density(x)).epsilon(1e-10));
  }
  CHECK(cauchy_stieltjes(law, 1.0).value ==
        doctest::Approx(std::exp(-(2.0 * std::numbers::ln2 - 1.0))).epsilon(1e-8));
  CHECK(cauchy_stieltjes(law, 0.0).value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("general density matches the theta = 1 formula") {
  const MeanLaw law(1.0, uniform_f());
  for (double x : {0.05, 0.2, 0.5, 0.7, 0.95}) {
    CHECK(mean_density_general(law, x) ==
          doctest::Approx(mean_density_theta1(law, x)).epsilon(1e-6));
  }
}

TEST_CASE("theta > 1 formula matches the general one") {
  const MeanLaw law(2.0, uniform_f());
  for (double x : {0.1, 0.5, 0.9}) {
    CHECK(mean_density_theta_gt1(law, x) ==
          doctest::Approx(mean_density_general(law, x)).epsilon(1e-6));
  }
}

TEST_CASE("theta = 0.5 on the uniform base") {
  const MeanLaw law(0.5, uniform_f());
  const double mass =
      integrate([&](double m) { return mean_density(law, m); }, 0.0, 1.0, law.quad()).value;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
  const double cs = cauchy_stieltjes(law, 1.0).value;
  CHECK(std::abs(cs / std::exp(-0.5 * psi_uniform(1.0)) - 1.0) < 1e-5);
  // Symmetric base: M is symmetric about 1/2.
  CHECK(mean_cdf(law, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("affine equivariance of the density") {
  MonotoneMap scale;
  scale.map = [](double x) { return 3.0 * x; };
  scale.inverse = [](double y) { return y / 3.0; };
  scale.inverse_derivative = [](double) { return 1.0 / 3.0; };
  const MeanLaw a(2.0, make_functionals(make_uniform01()));
  const MeanLaw b(2.0, make_functionals(pushforward_monotone(make_uniform01(), scale)));
  for (double x : {0.1, 0.4, 0.75}) {
    CHECK(mean_density(b, 3.0 * x) ==
          doctest::Approx(mean_density(a, x) / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("point masses") {
  const MeanLaw law(1.0, make_point_mass(1.0));
  for (double lam : {0.5, 1.0, 2.0}) {
    CHECK(cauchy_stieltjes(law, lam).value == doctest::Approx(1.0 / (1.0 + lam)));
  }
  CHECK(mean_cdf(MeanLaw(0.5, make_point_mass(1.0)), 1.0) == 1.0);
}

TEST_CASE("preconditions and contracts") {
  CHECK_THROWS_AS(MeanLaw(0.0, make_uniform01()), DomainError);
  CHECK_THROWS_AS(mean_density_theta1(MeanLaw(2.0, uniform_f()), 0.3), ContractError);
  CHECK_THROWS_AS(mean_density_theta_gt1(MeanLaw(1.0, uniform_f()), 0.3), ContractError);
  CHECK_THROWS_AS(cauchy_stieltjes(MeanLaw(1.0, uniform_f()), -1.0), DomainError);
  // An atom of mass 1/2 with theta = 2 breaks the cdf formula.
  DistributionSpec mixed = thin(make_uniform01(), 0.5);
  CHECK_THROWS_AS(mean_cdf(MeanLaw(2.0, mixed), 0.3), PreconditionError);
}

TEST_CASE("delta_theta vanishes off the support") {
  const MeanLaw law(1.0, uniform_f());
  CHECK(delta_theta(law, -1.0) == 0.0);
  CHECK(delta_theta(law, 0.0) == 0.0);
  CHECK(delta_theta(law, 0.5) == doctest::Approx(dk_mean_density(0.5)));
}
