#include <doctest.h>

#include <cmath>

#include "polmax/geometry.hpp"
#include "test_support.hpp"

using namespace polmax;

TEST_CASE("validate_domain accepts a regular domain") {
  PhysicalParams p;
  const ValidatedDomain v = validate_domain({1.0, 1.0, 0.6, 0.4}, p);
  CHECK(v.domain.l3() == doctest::Approx(1.0));
}

TEST_CASE("validate_domain names the offending field") {
  PhysicalParams p;
  try {
    validate_domain({0.0, 1.0, 0.6, 0.4}, p);
    FAIL("no throw");
  } catch (const GeometryError& e) {
    CHECK(e.code() == GeometryErrc::NonPositiveLength);
    CHECK(e.field() == "l1");
  }
  p.eps = -1.0;
  try {
    validate_domain({1.0, 1.0, 0.6, 0.4}, p);
    FAIL("no throw");
  } catch (const GeometryError& e) {
    CHECK(e.code() == GeometryErrc::NonPositiveParameter);
    CHECK(e.field() == "eps");
  }
  p.eps = 1.0;
  p.omega = 0.0;
  CHECK_THROWS_AS(validate_domain({1.0, 1.0, 0.6, 0.4}, p), GeometryError);
}

TEST_CASE("build_grid derives the lower block from equal spacing") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 6);
  CHECK(g.n3_minus == 4);
  CHECK(g.h == doctest::Approx(0.1));
  const Grid s = build_grid(DomainSpec{1.0, 1.0, 0.5, 0.5}, 4, 4, 8);
  CHECK(s.n3_minus == 8);
  CHECK(s.h == doctest::Approx(0.0625));
}

TEST_CASE("build_grid rejects incommensurate and coarse inputs") {
  try {
    build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 5);
    FAIL("no throw");
  } catch (const GeometryError& e) {
    CHECK(e.code() == GeometryErrc::IncommensurateBlocks);
  }
  try {
    build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 2, 4, 6);
    FAIL("no throw");
  } catch (const GeometryError& e) {
    CHECK(e.code() == GeometryErrc::TooCoarse);
  }
  CHECK_THROWS_AS(build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 5, 4, 6), GeometryError);
  CHECK_THROWS_AS(build_grid(DomainSpec{1.0, 1.0, 0.5, 0.5}, 4, 4, 1), GeometryError);
}

TEST_CASE("midpoints avoid the interface and the plates") {
  for (int np : {3, 6, 9, 30}) {
    const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, np);
    double closest = 1e9;
    for (int m = 0; m < g.n3(); ++m) {
      const double x = g.x3(m);
      closest = std::min({closest, std::abs(x), std::abs(x - 0.6), std::abs(x + 0.4)});
      CHECK(x == doctest::Approx(-0.4 + (m + 0.5) * 1.0 / g.n3()));
    }
    CHECK(closest >= g.h / 2 - 1e-15);
  }
}

TEST_CASE("signed wavenumbers and Nyquist") {
  CHECK(signed_wavenumber(0, 8) == 0);
  CHECK(signed_wavenumber(4, 8) == 4);
  CHECK(signed_wavenumber(5, 8) == -3);
  CHECK(is_nyquist(4, 8));
  CHECK_FALSE(is_nyquist(3, 8));
}

TEST_CASE("same_grid compares shape and lengths") {
  const Grid a = build_grid(test::asym_domain(), 4, 4, 6);
  CHECK(same_grid(a, build_grid(test::asym_domain(), 4, 4, 6)));
  CHECK_FALSE(same_grid(a, build_grid(test::asym_domain(), 4, 6, 6)));
  CHECK_FALSE(same_grid(a, build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 6)));
}
