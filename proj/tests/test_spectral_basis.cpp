#include <doctest.h>

#include <cmath>
#include <random>

#include "polmax/spectral_basis.hpp"
#include "test_support.hpp"

using namespace polmax;

namespace {

const X3Kind kKinds[] = {X3Kind::Nodal, X3Kind::SineHalf, X3Kind::CosineHalf, X3Kind::SineFull, X3Kind::CosineFull};

ScalarField sample_x3(const Grid& g, double (*fn)(double)) {
  ScalarField f = ScalarField::zeros(g);
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int j2 = 0; j2 < g.n2; ++j2)
      for (int m = 0; m < g.n3(); ++m) f.at(j1, j2, m) = fn(g.x3(m));
  return f;
}

double max_other(const SpectralScalar& s, int k1, int k2, int k3) {
  double worst = 0.0;
  for (int a = 0; a < s.grid.n1; ++a)
    for (int b = 0; b < s.grid.n2; ++b)
      for (int c = 0; c < s.n3(); ++c)
        if (a != k1 || b != k2 || c != k3) worst = std::max(worst, std::abs(s.at(a, b, c)));
  return worst;
}

}  // namespace

TEST_CASE("full sine mode is reproduced") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 6);
  const ScalarField f = sample_x3(g, [](double x) { return std::sin(kPi * (x + 0.4)); });
  const SpectralScalar s = analyze(f, {X3Kind::SineFull, Block::Both});
  // orthonormal modes: sin = sqrt(l3/2) * mode, horizontal mean sqrt(l1 l2)
  CHECK(std::abs(s.at(0, 0, 0) - cplx(std::sqrt(0.5), 0.0)) < 1e-12);
  CHECK(max_other(s, 0, 0, 0) < 1e-12);
}

TEST_CASE("constant on the upper block is the zeroth cosine") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 6);
  ScalarField up = ScalarField::zeros(g, Block::Upper);
  for (cplx& v : up.samples) v = 1.0;
  const SpectralScalar s = analyze(up, {X3Kind::CosineHalf, Block::Upper});
  CHECK(std::abs(s.at(0, 0, 0) - cplx(std::sqrt(0.6), 0.0)) < 1e-12);
  CHECK(max_other(s, 0, 0, 0) < 1e-12);
}

TEST_CASE("round trips on random fields for every basis") {
  std::mt19937 rng(7);
  const Grid g = build_grid(test::asym_domain(), 6, 4, 6);
  for (X3Kind k : kKinds)
    for (int r = 0; r < 100; ++r) {
      const ScalarField f = test::random_field(g, rng);
      const SpectralScalar s = analyze(f, {k, Block::Both});
      CHECK(test::rel_err(synthesize(s), f) < 1e-12);
      const SpectralScalar t = analyze(synthesize(s), {k, Block::Both});
      double d = 0.0, n = 0.0;
      for (std::size_t q = 0; q < s.coeffs.size(); ++q) {
        d = std::max(d, std::abs(s.coeffs[q] - t.coeffs[q]));
        n = std::max(n, std::abs(s.coeffs[q]));
      }
      CHECK(d / n < 1e-12);
    }
}

TEST_CASE("half bases also work on a single block") {
  std::mt19937 rng(8);
  const Grid g = build_grid(test::asym_domain(), 4, 4, 6);
  for (Block b : {Block::Lower, Block::Upper})
    for (X3Kind k : {X3Kind::SineHalf, X3Kind::CosineHalf}) {
      const ScalarField f = test::random_field(g, rng, b);
      CHECK(test::rel_err(synthesize(analyze(f, {k, b})), f) < 1e-12);
    }
  const ScalarField f = test::random_field(g, rng, Block::Upper);
  try {
    analyze(f, {X3Kind::SineFull, Block::Upper});
    FAIL("no throw");
  } catch (const BasisError& e) {
    CHECK(e.code() == BasisErrc::BlockMismatch);
  }
}

TEST_CASE("Parseval with orthonormal modes") {
  std::mt19937 rng(9);
  const Grid g = build_grid(test::asym_domain(), 4, 6, 9);
  for (X3Kind k : kKinds) {
    const ScalarField f = test::random_field(g, rng);
    const SpectralScalar s = analyze(f, {k, Block::Both});
    CHECK(coefficient_norm(s) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
  }
}

TEST_CASE("synthesis of a single horizontal mode") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 8, 4, 6);
  SpectralScalar s = SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both});
  CHECK(l2_norm(synthesize(s)) == 0.0);
  s.at(1, 0, 0) = 1.0;
  const ScalarField f = synthesize(s);
  // unit L2 mode: exp(2 pi i x1) / sqrt(l1 l2 l3)
  double worst = 0.0;
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int m = 0; m < g.n3(); ++m)
      worst = std::max(worst, std::abs(f.at(j1, 2, m) - std::polar(1.0, 2 * kPi * g.x1(j1))));
  CHECK(worst < 1e-12);
}

TEST_CASE("x3 derivative flips parity with exact factors") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 6);
  SpectralScalar s = SpectralScalar::zeros(g, {X3Kind::SineFull, Block::Both});
  s.at(0, 0, 0) = 1.0;
  const SpectralScalar d = derivative(s, 3);
  CHECK(d.basis.x3 == X3Kind::CosineFull);
  CHECK(std::abs(d.at(0, 0, 1) - cplx(kPi, 0.0)) < 1e-13);
  CHECK(max_other(d, 0, 0, 1) < 1e-13);

  SpectralScalar c = SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both});
  c.at(0, 0, 0) = 1.0;
  const SpectralScalar dc = derivative(c, 3);
  CHECK(dc.basis.x3 == X3Kind::SineFull);
  CHECK(max_other(dc, -1, -1, -1) == 0.0);

  ScalarField n = ScalarField::zeros(g);
  try {
    derivative(analyze(n, {X3Kind::Nodal, Block::Both}), 3);
    FAIL("no throw");
  } catch (const BasisError& e) {
    CHECK(e.code() == BasisErrc::NodalAxisDerivative);
  }
}

TEST_CASE("second x3 derivative is minus the squared frequency") {
  std::mt19937 rng(3);
  const Grid g = build_grid(test::asym_domain(), 4, 4, 6);
  for (X3Kind k : {X3Kind::SineHalf, X3Kind::CosineHalf, X3Kind::SineFull, X3Kind::CosineFull}) {
    const SpectralScalar s = analyze(test::random_field(g, rng), {k, Block::Both});
    const SpectralScalar dd = derivative(derivative(s, 3), 3);
    CHECK(dd.basis.x3 == k);
    for (const X3Segment& seg : x3_segments(g, {k, Block::Both}))
      for (int i = 0; i < seg.N; ++i) {
        if (seg.sine && i == seg.N - 1) continue;  // Nyquist sine has no cosine partner
        const double w = kPi * seg.mode_number(i) / seg.L;
        const cplx want = -w * w * s.at(1, 2, seg.offset + i);
        CHECK(std::abs(dd.at(1, 2, seg.offset + i) - want) <= 1e-12 * (1.0 + std::abs(want)));
      }
  }
}

TEST_CASE("horizontal derivative") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 8, 4, 6);
  SpectralScalar s = SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both});
  s.at(1, 0, 0) = 1.0;
  s.at(4, 0, 0) = 1.0;  // Nyquist
  const SpectralScalar d = derivative(s, 1);
  CHECK(std::abs(d.at(1, 0, 0) - cplx(0.0, 2 * kPi)) < 1e-13);
  CHECK(d.at(4, 0, 0) == cplx{});
}

TEST_CASE("integration by parts between sine and cosine halves") {
  std::mt19937 rng(11);
  const Grid g = build_grid(test::asym_domain(), 4, 4, 6);
  const SpectralScalar u = analyze(test::random_field(g, rng), {X3Kind::SineHalf, Block::Both});
  const SpectralScalar v = analyze(test::random_field(g, rng), {X3Kind::CosineHalf, Block::Both});
  // <d3 u, v> + <u, d3 v> via the orthonormal coefficients
  const SpectralScalar du = derivative(u, 3), dv = derivative(v, 3);
  cplx a{}, b{};
  for (std::size_t q = 0; q < u.coeffs.size(); ++q) {
    a += du.coeffs[q] * std::conj(v.coeffs[q]);
    b += u.coeffs[q] * std::conj(dv.coeffs[q]);
  }
  CHECK(std::abs(a + b) <= 1e-12 * (std::abs(a) + 1.0));
}

TEST_CASE("x3 traces") {
  std::mt19937 rng(5);
  const Grid g = build_grid(test::asym_domain(), 4, 4, 6);
  const ScalarField f = test::random_field(g, rng);
  const Spectrum2D t = trace_x3(analyze(f, {X3Kind::SineHalf, Block::Both}), TraceLocation::GammaPlus);
  for (const cplx& v : t.coeffs) CHECK(std::abs(v) < 1e-13);
  const SpectralScalar c = analyze(f, {X3Kind::CosineFull, Block::Both});
  const Spectrum2D up = trace_x3(c, TraceLocation::GammaPlus), lo = trace_x3(c, TraceLocation::GammaMinus);
  for (std::size_t q = 0; q < up.coeffs.size(); ++q) CHECK(std::abs(up.coeffs[q] - lo.coeffs[q]) < 1e-12);

  const Grid u = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 4, 4, 6);
  SpectralScalar s = SpectralScalar::zeros(u, {X3Kind::SineFull, Block::Both});
  s.at(0, 0, 0) = 1.0;
  for (const cplx& v : trace_x3(s, TraceLocation::Top).coeffs) CHECK(std::abs(v) < 1e-15);
  CHECK_THROWS_AS(trace_x3(analyze(f, {X3Kind::Nodal, Block::Both}), TraceLocation::Top), BasisError);
}
