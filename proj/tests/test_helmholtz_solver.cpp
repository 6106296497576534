#include <doctest.h>

#include <cmath>
#include <random>

#include "oracle_values.hpp"
#include "polmax/helmholtz_solver.hpp"
#include "polmax/oracle.hpp"
#include "polmax/trig_series.hpp"
#include "test_support.hpp"

using namespace polmax;
namespace ov = polmax::oracle_values;

namespace {

WeakRhs zero_rhs(const Grid& g) {
  const SpectralScalar n = SpectralScalar::zeros(g, {X3Kind::Nodal, Block::Both});
  return {SpectralScalar::zeros(g, {X3Kind::SineHalf, Block::Both}),
          SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both}),
          n, n, n, n};
}

double max_coef(const SpectralScalar& s) {
  double m = 0.0;
  for (const cplx& v : s.coeffs) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("zero data gives zero fields") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 8, 8, 6);
  const PhysicalParams p = test::params_w2(5.0);
  const AxialSolution a = solve_axial(zero_rhs(g), p);
  CHECK(max_coef(a.E1) == 0.0);
  CHECK(max_coef(a.H1) == 0.0);
  const TransverseSolution t = solve_transverse(a, zero_rhs(g), p);
  CHECK(max_coef(t.E2) + max_coef(t.E3) + max_coef(t.H2) + max_coef(t.H3) == 0.0);
  const SolveResult r = solve(SourcePair::zeros(g), p);
  for (const ScalarField& c : r.fields.c) CHECK(max_abs(c) == 0.0);
  CHECK(r.report.resonance.dist_to_sigma_M > 0.0);
  CHECK(r.report.resonance.dist_to_sigma_l1 > 0.0);
}

TEST_CASE("single H1 mode is a diagonal division") {
  const Grid g = build_grid(DomainSpec{1.0, 1.0, 0.6, 0.4}, 8, 8, 6);
  WeakRhs rhs = zero_rhs(g);
  rhs.F_H1.at(0, 0, 1) = 1.0;
  const AxialSolution a = solve_axial(rhs, test::params_w2(5.0));
  CHECK(a.H1.at(0, 0, 1).real() == doctest::Approx(1.0 / ov::kDistOmega2Five).epsilon(1e-13));
  CHECK(a.H1.at(0, 0, 1).real() == doctest::Approx(0.20535).epsilon(1e-4));
}

TEST_CASE("forward-applied E1 is recovered") {
  const DomainSpec d{1.0, 1.0, 0.6, 0.4};
  const Grid g = build_grid(d, 8, 8, 6);
  const PhysicalParams p = test::params_w2(5.0);
  const ScalarField e1 = sample(cos_cos(1, 0, true, 1, Family::Upper), g);  // sin(2 pi x1) mixes k1 = +-1
  const SpectralScalar c = analyze(e1, {X3Kind::SineHalf, Block::Both});
  WeakRhs rhs = zero_rhs(g);
  rhs.F_E1 = c;
  for (int k1 = 0; k1 < g.n1; ++k1)
    for (int k2 = 0; k2 < g.n2; ++k2)
      for (const X3Segment& s : x3_segments(g, {X3Kind::SineHalf, Block::Both}))
        for (int i = 0; i < s.N; ++i) {
          const double a1 = angular_wavenumber(k1, g.n1, d.l1), a2 = angular_wavenumber(k2, g.n2, d.l2);
          const double w = kPi * s.mode_number(i) / s.L;
          rhs.F_E1.at(k1, k2, s.offset + i) *= a1 * a1 + a2 * a2 + w * w - p.kappa();
        }
  const AxialSolution a = solve_axial(rhs, p);
  for (std::size_t q = 0; q < c.coeffs.size(); ++q) CHECK(std::abs(a.E1.coeffs[q] - c.coeffs[q]) < 1e-10);
}

TEST_CASE("pure axial forcing of E2") {
  const DomainSpec d{1.0, 1.0, 0.6, 0.4};
  const Grid g = build_grid(d, 8, 4, 6);
  const PhysicalParams p = test::params_w2(5.0);
  SourcePair src = SourcePair::zeros(g);
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int j2 = 0; j2 < g.n2; ++j2)
      for (int m = 0; m < g.n3(); ++m) src.f_e.c[1].at(j1, j2, m) = std::polar(1.0, 2 * kPi * g.x1(j1));
  const WeakRhs rhs = assemble_weak_rhs(src, p);
  const AxialSolution none{SpectralScalar::zeros(g, {X3Kind::SineHalf, Block::Both}),
                           SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both})};
  const ScalarField e2 = from_fourier_nodal(solve_transverse(none, rhs, p).E2);
  // (a1^2 - w^2 eps mu) E2 = i w mu g
  const cplx factor = cplx(0.0, p.omega * p.mu) / (ov::kFourPiSquared - 5.0);
  double worst = 0.0;
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int m = 0; m < g.n3(); ++m)
      worst = std::max(worst, std::abs(e2.at(j1, 1, m) - factor * src.f_e.c[1].at(j1, 1, m)));
  CHECK(worst < 1e-13);
  CHECK(5.0 - ov::kFourPiSquared == doctest::Approx(-34.478).epsilon(1e-4));
}

TEST_CASE("manufactured solutions are reproduced") {
  const DomainSpec d{1.0, 1.3, 0.6, 0.4};
  const Grid g = build_grid(d, 8, 8, 12);
  const PhysicalParams p = test::params_w2(5.0);
  for (const std::string& name : recipe_names()) {
    if (name.rfind("bad-", 0) == 0) continue;
    CAPTURE(name);
    const SampledCase c = sample(manufacture(name, d, p), g);
    const SolveResult r = solve(c.sources, p);
    for (int q = 0; q < 6; ++q) CHECK(l2_norm(r.fields.c[q] - c.fields.c[q]) <= 1e-9);
  }
}

TEST_CASE("pure gradient sources give only the corrections") {
  const DomainSpec d{1.0, 1.0, 0.6, 0.4};
  const Grid g = build_grid(d, 8, 8, 6);
  const PhysicalParams p = test::params_w2(5.0);
  const TrigField phi = cos_cos(1, 0, true, 1, Family::Lower), psi = cos_cos(1, 1, false, 2, Family::Full);
  SourcePair src{sample(TrigVector{{d1(psi, d), d2(psi, d), d3(psi, d)}}, g),
                 sample(TrigVector{{d1(phi, d), d2(phi, d), d3(phi, d)}}, g)};
  const SolveResult r = solve(src, p);
  const cplx ge = 1.0 / cplx(0.0, p.omega * p.eps), gh = 1.0 / cplx(0.0, p.omega * p.mu);
  for (int i = 0; i < 3; ++i) {
    CHECK(l2_norm(r.fields.c[i] - ge * src.f_e.c[i]) < 1e-12);
    CHECK(l2_norm(r.fields.c[3 + i] + gh * src.f_h.c[i]) < 1e-12);
  }
}

TEST_CASE("linearity") {
  std::mt19937 rng(31);
  const Grid g = build_grid(test::asym_domain(), 6, 6, 6);
  const PhysicalParams p = test::params_w2(5.0);
  const SourcePair a{test::random_vector(g, rng), test::random_vector(g, rng)};
  const SourcePair b{test::random_vector(g, rng), test::random_vector(g, rng)};
  const cplx s(-0.7, 0.4);
  const SolveResult ra = solve(a, p), rb = solve(b, p), rc = solve({a.f_h + s * b.f_h, a.f_e + s * b.f_e}, p);
  for (int q = 0; q < 6; ++q)
    CHECK(l2_norm(rc.fields.c[q] - ra.fields.c[q] - s * rb.fields.c[q]) <= 1e-11 * (1.0 + l2_norm(rc.fields.c[q])));
}

TEST_CASE("divergence orthogonality for band-limited projected sources") {
  const DomainSpec d{1.0, 1.3, 0.6, 0.4};
  const PhysicalParams p = test::params_w2(5.0);
  for (int np : {6, 24}) {
    const Grid g = build_grid(d, 8, 8, np);
    for (const char* name : {"bulk-3", "half-upper-1", "mixed-1"}) {
      CAPTURE(name);
      const SampledCase c = sample(manufacture(name, d, p), g);
      const SourcePair t{project_h(c.sources.f_h).tilde, project_e(c.sources.f_e).tilde};
      const SolveResult r = solve(t, p);
      const VectorField E{{r.fields.c[0], r.fields.c[1], r.fields.c[2]}};
      const VectorField H{{r.fields.c[3], r.fields.c[4], r.fields.c[5]}};
      CHECK(max_gradient_pairing(E, Potential::X0) <= 1e-9);
      CHECK(max_gradient_pairing(H, Potential::Y0) <= 1e-9);
    }
  }
}

TEST_CASE("resonant frequencies are refused") {
  const DomainSpec d{1.0, 1.0, 0.6, 0.4};
  const Grid g = build_grid(d, 8, 8, 6);
  try {
    solve(SourcePair::zeros(g), test::params_w2(ov::kPiSquared));
    FAIL("no throw");
  } catch (const ResonantFrequency& e) {
    CHECK(e.entry.k3 == 1);
    CHECK(e.entry.provenance == Provenance::Full);
    CHECK(std::string(e.what()).find("ResonantFrequency") != std::string::npos);
  }
  CHECK_THROWS_AS(solve(SourcePair::zeros(g), test::params_w2(ov::kFourPiSquared)), ResonantAxialFrequency);
  CHECK_THROWS_AS(solve_transverse(solve_axial(zero_rhs(g), test::params_w2(5.0)), zero_rhs(g),
                                   test::params_w2(ov::kFourPiSquared)),
                  ResonantAxialFrequency);
}

TEST_CASE("growth near an eigenvalue is inverse to the distance") {
  const DomainSpec d = test::unit_cube();
  const Grid g = build_grid(d, 8, 8, 8);
  SourcePair src = SourcePair::zeros(g);
  src.f_e.c[1] = sample(cos_cos(0, 0, true, 1, Family::Full), g);  // couples to bulk (0,0,1)
  std::vector<double> lx, ly;
  for (double delta : {1e-1, 1e-2, 1e-3}) {
    const SolveResult r = solve(src, test::params_w2(ov::kPiSquared + delta));
    double n = 0.0;
    for (const ScalarField& c : r.fields.c) n += std::pow(l2_norm(c), 2);
    lx.push_back(std::log(delta));
    ly.push_back(0.5 * std::log(n));
  }
  const double slope = (ly[2] - ly[0]) / (lx[2] - lx[0]);
  CHECK(std::abs(slope + 1.0) < 0.1);
}
