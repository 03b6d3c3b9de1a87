#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "dmeans/errors.hpp"
#include "dmeans/quadrature.hpp"

using namespace dmeans;

TEST_CASE("integrable endpoint singularities") {
  QuadratureConfig q;
  CHECK(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, q).value ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0, q).value ==
        doctest::Approx(-1.0).epsilon(1e-12));
  // Singular at the upper end, resolved through the distance to b.
  NodeIntegrand f = [](const Node& n) { return std::pow(n.from_upper, -0.75); };
  CHECK(integrate(f, 0.0, 1.0, q).value == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("infinite ranges") {
  QuadratureConfig q;
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, kInf, q).value ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); }, 0.0, kInf, q)
            .value == doctest::Approx(1.0).epsilon(1e-12));
  // Slow algebraic tail with a singular start.
  const double v = integrate([](double x) { return std::pow(x, -0.5) / (1.0 + x); },
                             0.0, kInf, q)
                       .value;
  CHECK(v == doctest::Approx(std::numbers::pi).epsilon(1e-10));
}

TEST_CASE("pieces put kinks on segment ends") {
  QuadratureConfig q;
  const std::vector<double> pts{-1.0, 0.3, 2.0};
  const double v = integrate_pieces([](double x) { return std::abs(x - 0.3); }, pts, q).value;
  CHECK(v == doctest::Approx(0.5 * 1.3 * 1.3 + 0.5 * 1.7 * 1.7).epsilon(1e-13));
}

TEST_CASE("Gauss-Kronrod is exact for low-degree polynomials") {
  const QuadResult r = gauss_kronrod15([](double x) { return std::pow(x, 9) - x; }, 0.0, 2.0);
  CHECK(r.value == doctest::Approx(102.4 - 2.0).epsilon(1e-14));
  CHECK(r.error < 1e-10);
}

TEST_CASE("config validation") {
  QuadratureConfig q;
  CHECK_NOTHROW(q.validate());
  q.rel_tol = 0.0;
  CHECK_THROWS_AS(q.validate(), DomainError);
  QuadratureConfig r;
  r.rel_tol = 2.0;
  CHECK_THROWS_AS(r.validate(), DomainError);
  QuadratureConfig t = QuadratureConfig{}.tightened(100.0);
  CHECK(t.rel_tol == doctest::Approx(1e-12));
}
