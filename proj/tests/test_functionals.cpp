#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dmeans/catalog.hpp"
#include "dmeans/errors.hpp"
#include "dmeans/functionals.hpp"

using namespace dmeans;

namespace {

const double kLn2 = std::numbers::ln2;

// Survival 1/log(e + x): log(1 + x) P(X > x) -> 1, so psi diverges.
DistributionSpec heavy_tail() {
  DistributionSpec s;
  s.label = "heavy";
  s.support = {0.0, kInf};
  s.cdf = [](double x) { return x <= 0.0 ? 0.0 : 1.0 - 1.0 / std::log(std::numbers::e + x); };
  s.density = [](double x) {
    const double l = std::log(std::numbers::e + x);
    return 1.0 / ((std::numbers::e + x) * l * l);
  };
  return s;
}

}  // namespace

TEST_CASE("psi against frozen values") {
  const DistributionSpec u = make_uniform01();
  CHECK(psi(u, 0.5) == doctest::Approx(0.216395324324493146).epsilon(1e-10));
  CHECK(psi(u, 1.0) == doctest::Approx(0.386294361119890619).epsilon(1e-10));
  CHECK(psi(u, 2.0) == doctest::Approx(0.647918433002164537).epsilon(1e-10));
  const DistributionSpec z = make_lamperti(0.5);
  CHECK(psi(z, 0.5) == doctest::Approx(0.626341499429429467).epsilon(1e-9));
  CHECK(psi(z, 1.0) == doctest::Approx(0.929695398341610215).epsilon(1e-9));
  CHECK(psi(z, 2.0) == doctest::Approx(1.319488679989374776).epsilon(1e-9));
  const DistributionSpec w = make_exp_ratio();
  CHECK(psi(w, 0.5) == doctest::Approx(kLn2).epsilon(1e-9));
  CHECK(psi(w, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(psi(w, 2.0) == doctest::Approx(2.0 * kLn2).epsilon(1e-9));
  CHECK(psi(u, 0.0) == 0.0);
}

TEST_CASE("closed forms agree with quadrature") {
  const DistributionSpec u = make_uniform01();
  const DistributionSpec w = make_exp_ratio();
  for (double lam : {0.1, 0.999999, 1.0, 1.00001, 7.0}) {
    CHECK(psi_uniform(lam) == doctest::Approx(psi(u, lam)).epsilon(1e-10));
    CHECK(psi_exp_ratio(lam) == doctest::Approx(psi(w, lam)).epsilon(1e-9));
  }
  for (double t : {0.01, 0.3, 0.5, 0.99, 1.5, 40.0}) {
    CHECK(phi_uniform(t) == doctest::Approx(phi(u, t)).epsilon(1e-10));
  }
  for (double t : {0.05, 1.0, 3.0, 200.0}) {
    CHECK(phi_exp_ratio(t) == doctest::Approx(phi(w, t)).epsilon(1e-9));
  }
  CHECK(phi_uniform(0.5) == doctest::Approx(std::log(0.5) - 1.0).epsilon(1e-14));
}

TEST_CASE("phi of atoms and thinned laws") {
  const DistributionSpec p = make_point_mass(2.0);
  CHECK(phi(p, 5.0) == doctest::Approx(std::log(3.0)));
  CHECK(phi(p, 2.0) == 0.0);  // an atom at t contributes nothing
  const ThinnedSpec t = thin(make_uniform01(), 0.4);
  for (double x : {0.2, 0.7, 3.0}) {
    const double expect = 0.4 * phi_uniform(x) + 0.6 * std::log(x);
    CHECK(phi_thinned(t, x) == doctest::Approx(expect).epsilon(1e-10));
    CHECK(phi(t, x) == doctest::Approx(expect).epsilon(1e-10));
  }
}

TEST_CASE("phi stays finite for huge arguments") {
  const DistributionSpec w = make_exp_ratio();
  const double v = phi(w, 1e300);
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(300.0 * std::log(10.0)).epsilon(1e-10));
}

TEST_CASE("existence check") {
  CHECK(existence_check(make_uniform01()));
  CHECK(existence_check(make_exp_ratio()));
  CHECK(existence_check(make_lamperti(0.3)));
  const DistributionSpec h = heavy_tail();
  CHECK_FALSE(existence_check(h));
  CHECK_THROWS_AS(psi(h, 1.0), ExistenceError);
  CHECK_THROWS_AS(phi(h, 1.0), ExistenceError);
}

TEST_CASE("functionals handle caches and rejects bad arguments") {
  const FunctionalsPtr f = make_functionals(make_uniform01());
  CHECK(f->psi(1.0) == doctest::Approx(2.0 * kLn2 - 1.0).epsilon(1e-10));
  CHECK(f->psi(1.0) == f->psi(1.0));
  CHECK_THROWS_AS(f->psi(-1.0), DomainError);
}

TEST_CASE("sin of pi u from the smaller side") {
  CHECK(sin_pi_pair(0.5, 0.5) == doctest::Approx(1.0));
  CHECK(sin_pi_pair(1e-20, 1.0) == doctest::Approx(std::numbers::pi * 1e-20));
  CHECK(sin_pi_pair(1.0, 1e-20) == doctest::Approx(std::numbers::pi * 1e-20));
  CHECK(sin_pi_pair(0.0, 1.0) == 0.0);
}
