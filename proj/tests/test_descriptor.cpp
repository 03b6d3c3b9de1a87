#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dmeans/catalog.hpp"
#include "dmeans/descriptor.hpp"
#include "dmeans/errors.hpp"

using namespace dmeans;
using nlohmann::json;

TEST_CASE("basic kinds") {
  const BuiltDistribution u = parse_distribution(R"({"kind":"uniform01"})");
  CHECK(u.spec->cdf(0.3) == doctest::Approx(0.3));
  REQUIRE(u.phi_closed);
  REQUIRE(u.psi_closed);
  CHECK(u.psi_closed(1.0) == doctest::Approx(psi_uniform(1.0)));

  const BuiltDistribution bare = parse_distribution("exp_ratio");
  CHECK(bare.spec->cdf(1.0) == doctest::Approx(0.5));
  const BuiltDistribution quoted = parse_distribution(R"("exp_ratio")");
  CHECK(quoted.spec->cdf(3.0) == doctest::Approx(0.75));

  const BuiltDistribution p = build_distribution({{"kind", "point_mass"}, {"params", {{"a", 2.0}}}});
  CHECK(p.spec->atoms.size() == 1);
  CHECK(p.spec->atoms[0].location == 2.0);

  const BuiltDistribution z =
      parse_distribution(R"({"kind":"lamperti","params":{"alpha":0.5}})");
  CHECK(z.spec->cdf(1.0) == doctest::Approx(0.5));
}

TEST_CASE("nested kinds carry closed functionals") {
  const BuiltDistribution t = parse_distribution(
      R"({"kind":"thinned","params":{"sigma":0.4,"base":"uniform01"}})");
  CHECK(t.spec->atom_mass() == doctest::Approx(0.6));
  REQUIRE(t.phi_closed);
  CHECK(t.phi_closed(0.5) ==
        doctest::Approx(0.4 * phi_uniform(0.5) + 0.6 * std::log(0.5)));
  CHECK(t.psi_closed(2.0) == doctest::Approx(0.4 * psi_uniform(2.0)));

  const BuiltDistribution c = parse_distribution(
      R"({"kind":"tilt_base","params":{"c":2.0,"base":{"kind":"exp_ratio"}}})");
  REQUIRE(c.phi_closed);
  CHECK(c.phi_closed(0.3) == doctest::Approx(phi_tilt_exp_ratio(2.0, 0.3)));
  const FunctionalsPtr f = c.functionals();
  CHECK(f->phi(0.3) == doctest::Approx(phi(*c.spec, 0.3)).epsilon(1e-8));
}

TEST_CASE("catalog bases") {
  const BuiltDistribution g =
      parse_distribution(R"({"kind":"catalog:inv_G","params":{"alpha":0.5}})");
  CHECK(g.spec->cdf(2.0) == doctest::Approx(inv_G_cdf(0.5, 2.0)));
  REQUIRE(g.phi_closed);
  CHECK(g.phi_closed(2.0) == doctest::Approx(std::log(2.0)));
  REQUIRE(g.psi_closed);
  CHECK(g.psi_closed(1.0) == doctest::Approx(psi(*g.spec, 1.0)).epsilon(1e-8));
}

TEST_CASE("malformed descriptors") {
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"nope"})"), DomainError);
  CHECK_THROWS_AS(parse_distribution("nope"), DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"params":{}})"), DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"point_mass"})"), DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"point_mass","params":{"a":-1}})"),
                  DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"lamperti","params":{"alpha":"x"}})"),
                  DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"thinned","params":{"sigma":0.5}})"),
                  DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"catalog:sigma_alpha","params":{"alpha":0.5}})"),
                  DomainError);
  CHECK_THROWS_AS(parse_distribution(R"({"kind":"catalog:bogus"})"), DomainError);
}
