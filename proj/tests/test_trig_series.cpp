#include <doctest.h>

#include <cmath>

#include "polmax/trig_series.hpp"
#include "test_support.hpp"

using namespace polmax;

TEST_CASE("simplify merges and drops") {
  TrigField f = cos_cos(1, 0, true, 2, Family::Upper) + cos_cos(1, 0, true, 2, Family::Upper, -1.0);
  CHECK(is_zero(simplify(f)));
  TrigField g{{TrigTerm{1.0, 0, 0, true, 0, Family::Full}}};
  CHECK(is_zero(simplify(g)));
  TrigField h{{TrigTerm{2.0, 0, 0, false, -3, Family::Full}, TrigTerm{1.0, 0, 0, false, 3, Family::Full}}};
  CHECK(simplify(h).terms.size() == 1);
}

TEST_CASE("derivatives match finite differences of evaluate") {
  const DomainSpec d = test::asym_domain();
  TrigField f = cos_cos(1, 2, false, 3, Family::Full, cplx(0.3, 0.2)) + cos_cos(0, 1, true, 2, Family::Upper) +
                cos_cos(2, 0, false, 1, Family::Lower, 0.7);
  const double x1 = 0.31, x2 = 0.77, step = 1e-6;
  for (double x3 : {0.23, -0.17}) {
    const cplx fd1 = (evaluate(f, d, x1 + step, x2, x3) - evaluate(f, d, x1 - step, x2, x3)) / (2 * step);
    const cplx fd2 = (evaluate(f, d, x1, x2 + step, x3) - evaluate(f, d, x1, x2 - step, x3)) / (2 * step);
    const cplx fd3 = (evaluate(f, d, x1, x2, x3 + step) - evaluate(f, d, x1, x2, x3 - step)) / (2 * step);
    CHECK(std::abs(evaluate(d1(f, d), d, x1, x2, x3) - fd1) < 1e-6);
    CHECK(std::abs(evaluate(d2(f, d), d, x1, x2, x3) - fd2) < 1e-6);
    CHECK(std::abs(evaluate(d3(f, d), d, x1, x2, x3) - fd3) < 1e-6);
  }
}

TEST_CASE("divergence of a curl vanishes") {
  const DomainSpec d = test::asym_domain();
  TrigVector v;
  v.c[0] = cos_cos(1, 1, true, 2, Family::Full);
  v.c[1] = cos_cos(0, 1, false, 1, Family::Upper, 0.5);
  v.c[2] = cos_cos(2, 0, true, 3, Family::Lower, cplx(0, 1));
  const TrigVector c = curl(v, d);
  CHECK(is_zero(simplify(d1(c.c[0], d) + d2(c.c[1], d) + d3(c.c[2], d))));
}

TEST_CASE("half families vanish outside their block") {
  const DomainSpec d = test::asym_domain();
  const TrigField up = cos_cos(0, 0, false, 1, Family::Upper);
  CHECK(evaluate(up, d, 0.1, 0.1, -0.2) == cplx{});
  CHECK(std::abs(evaluate(up, d, 0.0, 0.0, 1e-9) - 1.0) < 1e-15);
  CHECK(max_jump(up, d) == doctest::Approx(1.0));
  CHECK(max_jump(cos_cos(0, 0, false, 1, Family::Full), d) < 1e-15);
}

TEST_CASE("exact traces at multiples of pi") {
  const DomainSpec d = test::asym_domain();
  const TrigField s = cos_cos(1, 0, true, 3, Family::Full);
  CHECK(max_trace(s, d, TraceLocation::Top) == 0.0);
  CHECK(max_trace(s, d, TraceLocation::Bottom) == 0.0);
  CHECK(max_trace(cos_cos(1, 0, true, 3, Family::Upper), d, TraceLocation::GammaPlus) == 0.0);
}

TEST_CASE("sampling and natural layouts") {
  const DomainSpec d = test::asym_domain();
  const Grid g = build_grid(d, 8, 8, 6);
  const TrigField f = cos_cos(1, 1, true, 2, Family::Upper) + cos_cos(1, 1, true, 1, Family::Lower);
  CHECK(natural_layout(f, g, X3Kind::Nodal) == X3Kind::SineHalf);
  CHECK(natural_layout(cos_cos(1, 0, false, 2, Family::Full), g, X3Kind::Nodal) == X3Kind::CosineFull);
  const TrigField mixed = cos_cos(1, 0, false, 2, Family::Full) + cos_cos(0, 0, true, 1, Family::Upper);
  CHECK(natural_layout(mixed, g, X3Kind::Nodal) == X3Kind::Nodal);
  const ScalarField s = sample(f, g);
  for (int m = 0; m < g.n3(); m += 3)
    CHECK(std::abs(s.at(3, 5, m) - evaluate(f, d, g.x1(3), g.x2(5), g.x3(m))) < 1e-14);
}
