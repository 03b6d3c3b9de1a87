#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dmeans/catalog.hpp"
#include "dmeans/dist_core.hpp"
#include "dmeans/errors.hpp"

using namespace dmeans;

namespace {
constexpr double kPi = std::numbers::pi;

double mass_on(const RealFn& f, double lo, double hi) {
  return integrate(f, lo, hi, QuadratureConfig{}).value;
}
}  // namespace

TEST_CASE("frozen values") {
  CHECK(u_alpha0_density(0.5, 0.5) == doctest::Approx(6.0 / kPi).epsilon(1e-13));
  CHECK(phi_u_alpha0(0.5, 0.5) == doctest::Approx(-std::log(9.0)).epsilon(1e-13));
  CHECK(sigma_alpha_density(0.5, 1.0) ==
        doctest::Approx(0.178317917418729468).epsilon(1e-12));
  CHECK(phi_inv_G(0.5, 0.5) == doctest::Approx(1.06959999347914074).epsilon(1e-12));
  CHECK(phi_inv_G(0.5, 2.0) == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(phi_inv_G(0.5, 5.0) == doctest::Approx(std::log(5.0)).epsilon(1e-12));
  CHECK(B_alpha_density(0.5, 4.0) == doctest::Approx(1.0 / (8.0 * kPi)).epsilon(1e-13));
  CHECK(dk_mean_density(0.5) == doctest::Approx(2.0 * std::numbers::e / kPi).epsilon(1e-14));
  CHECK(w_mean_density(1.0) == doctest::Approx(1.0 / kPi).epsilon(1e-14));
}

TEST_CASE("sine identities match the Lamperti cdf") {
  for (double alpha : {0.3, 0.5, 0.8}) {
    for (double z : {0.01, 0.7, 3.0, 100.0}) {
      const SinIdentities s = sin_identities(alpha, z);
      const double F = lamperti_cdf(alpha, z);
      CHECK(s.s1 == doctest::Approx(std::sin(kPi * alpha * F)).epsilon(1e-12));
      CHECK(s.s2 == doctest::Approx(std::sin(2.0 * kPi * alpha * (1.0 - F))).epsilon(1e-10));
    }
  }
}

TEST_CASE("boundary cases reduce to simpler laws") {
  // sigma = 1 - alpha of the Bertoin component is the B_alpha law.
  for (double x : {0.2, 1.0, 4.0}) {
    CHECK(bertoin_component_density(0.5, 0.5, x) ==
          doctest::Approx(B_alpha_density(0.5, x)).epsilon(1e-10));
  }
  // The inverse of G and G itself are linked through x = 1/u.
  for (double u : {0.2, 0.6}) {
    CHECK(inv_G_density(0.5, 1.0 / u) * (1.0 / (u * u)) ==
          doctest::Approx(bertoin_G_density(0.5, u)).epsilon(1e-12));
    CHECK(inv_G_cdf(0.5, 1.0 / u) == doctest::Approx(1.0 - bertoin_G_cdf(0.5, u)).epsilon(1e-12));
  }
  // Tilting relation: f_c(y) = exp(sigma psi(c)) / (c (1 - y)) f(x), y = cx/(1 + cx).
  for (double c : {1e-3, 0.5, 2.0}) {
    for (double x : {0.5, 2.0}) {
      const double y = c * x / (1.0 + c * x);
      const double pred = std::exp(0.3 * psi_inv_G(0.5, c)) / (c * (1.0 - y)) *
                          bertoin_component_density(0.5, 0.3, x);
      CHECK(bertoin_tilted_component_density(0.5, 0.3, c, y) ==
            doctest::Approx(pred).epsilon(1e-12));
    }
  }
  // c -> 0: the tilted density rescaled by c approaches the untilted one. The
  // gap is of order psi(c) ~ c^alpha, so c must be tiny.
  const double c = 1e-8;
  for (double x : {0.5, 1.0, 2.0}) {
    CHECK(c * bertoin_tilted_component_density(0.5, 0.3, c, c * x) ==
          doctest::Approx(bertoin_component_density(0.5, 0.3, x)).epsilon(1e-4));
  }
}

TEST_CASE("alpha -> 1 recovers the uniform-base component") {
  const double alpha = 1.0 - 1e-3;
  for (double sigma : {0.3, 0.7}) {
    for (int i = 1; i < 40; ++i) {
      const double y = 0.1 + 0.8 * i / 40.0;
      CHECK(std::abs(z_dagger_component_density(alpha, sigma, y) -
                     dk_component_density(sigma, y)) < 2e-2);
    }
  }
}

TEST_CASE("Laplace transforms") {
  for (double lam : {0.5, 1.0, 2.0}) {
    const double expect = lam * 1.5 / (std::pow(lam + 1.0, 1.5) - 1.0);
    CHECK(upsilon_laplace(0.5, lam) == doctest::Approx(expect).epsilon(1e-13));
    // With sigma = 1 - alpha, G_1 M has the law of G_{1-alpha} U.
    const double alpha = 0.5;
    const double direct = mass_on(
        [&](double y) {
          return z_dagger_component_density(alpha, 1.0 - alpha, y) / (1.0 + lam * y);
        },
        0.0, 1.0);
    CHECK(direct == doctest::Approx(z_dagger_laplace(alpha, lam)).epsilon(1e-8));
  }
}

TEST_CASE("densities integrate to one") {
  CHECK(mass_on([](double t) { return u_alpha0_density(0.4, t); }, 0.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(mass_on([](double x) { return sigma_alpha_density(0.5, x); }, 0.0, kInf) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // Continuity of D at x = 1.
  CHECK(D_function(0.5, 0.3, 1.0 - 1e-12) ==
        doctest::Approx(D_function(0.5, 0.3, 1.0 + 1e-12)).epsilon(1e-5));
  CHECK(D_function(0.5, 0.3, 1.0) == doctest::Approx(std::sin(kPi * 0.3)).epsilon(1e-12));
  CHECK(mass_on([](double x) { return upsilon_ddag_2alpha_density(0.4, x); }, 0.0, kInf) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("parameter checks") {
  CHECK_THROWS_AS(upsilon_ddag_2alpha_density(0.6, 0.5), DomainError);
  CHECK_THROWS_AS(u_alpha0_density(1.0, 0.5), DomainError);
  CHECK_THROWS_AS(sigma_dagger_density(0.5, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(catalog_entry("no_such_law"), DomainError);
  const CatalogEntry& e = catalog_entry("bertoin_tilted_component");
  CHECK_THROWS_AS(catalog_params(e, {{"alpha", 0.5}}), DomainError);
  CHECK_THROWS_AS(catalog_params(e, {{"alpha", 1.5}, {"sigma", 0.5}, {"c", 1.0}}),
                  DomainError);
  const CatalogParams p = catalog_params(e, {{"alpha", 0.5}, {"sigma", 0.5}, {"c", 1.0}});
  CHECK(p.at("c") == 1.0);
}

TEST_CASE("registry entries are consistent") {
  const CatalogParams given{{"alpha", 0.4}, {"sigma", 0.5}, {"c", 1.5}};
  for (const CatalogEntry& e : catalog()) {
    CAPTURE(e.name);
    CHECK_FALSE(e.notes.empty());
    const CatalogParams p = catalog_params(e, given);
    const Support s = e.support(p);
    CHECK(s.lower >= 0.0);
    const double x = s.bounded() ? 0.5 * (s.lower + s.upper) : s.lower + 1.0;
    CHECK(std::isfinite(e.density(p, x)));
    CHECK(e.density(p, x) >= 0.0);
    if (e.cdf) {
      const double c = e.cdf(p, x);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
    }
    if (e.spec) {
      const DistributionSpec spec = e.spec(p);
      CHECK(spec.density(x) == doctest::Approx(e.density(p, x)).epsilon(1e-12));
    }
  }
}
