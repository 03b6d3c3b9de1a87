#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dmeans/catalog.hpp"
#include "dmeans/errors.hpp"
#include "dmeans/subordinators.hpp"

using namespace dmeans;

TEST_CASE("partition validation") {
  PartitionSpec p{2.0, {0.25, 0.25}};
  CHECK_NOTHROW(p.validate());
  const auto s = p.sigmas();
  REQUIRE(s.size() == 2);
  CHECK(s[0] == doctest::Approx(0.5));
  PartitionSpec short_total{2.0, {0.25, 0.2}};
  CHECK_THROWS_AS(short_total.validate(), PreconditionError);
  PartitionSpec negative{1.0, {1.5, -0.5}};
  CHECK_THROWS_AS(negative.validate(), PreconditionError);
}

TEST_CASE("subordinator Laplace exponent is linear in time") {
  const GgcLaw g(1.5, make_functionals(make_uniform01(), {}, phi_uniform, psi_uniform));
  CHECK(ggc_laplace(g, 1.0, 2.0) == doctest::Approx(std::exp(-1.5 * psi_uniform(2.0))));
  CHECK(ggc_laplace(g, 0.3, 2.0) * ggc_laplace(g, 0.7, 2.0) ==
        doctest::Approx(ggc_laplace(g, 1.0, 2.0)).epsilon(1e-14));
  CHECK(ggc_laplace(g, 0.7, 0.0) == 1.0);
  CHECK_THROWS_AS(ggc_laplace(g, 0.0, 2.0), DomainError);
}

TEST_CASE("joint density of increments is the product of marginals") {
  const GgcLaw g(1.0, make_functionals(make_uniform01(), {}, phi_uniform, psi_uniform));
  const PartitionSpec p{1.0, {0.5, 0.5}};
  const FidiResult r = fidi_density(g, p, {0.3, 1.2});
  REQUIRE(r.marginals.size() == 2);
  CHECK(r.joint == doctest::Approx(r.marginals[0] * r.marginals[1]).epsilon(1e-14));
  CHECK(r.marginals[0] ==
        doctest::Approx(ggc_component_density(g.spec(), 0.5, 0.3)).epsilon(1e-12));
  CHECK_THROWS_AS(fidi_density(g, PartitionSpec{2.0, {0.25, 0.25}}, {0.3, 1.2}),
                  PreconditionError);
  CHECK_THROWS_AS(fidi_density(g, p, {0.3}), PreconditionError);
}

TEST_CASE("convolution of component densities") {
  const auto F = make_functionals(make_uniform01(), {}, phi_uniform, psi_uniform);
  const ConvolutionReport r = convolution_check(*F, 0.5, 0.5, 20, 5.0);
  CHECK(r.grid.size() == 20);
  CHECK(r.max_abs_residual < 1e-4);
}
