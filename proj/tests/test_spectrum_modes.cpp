#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "polmax/maxwell_verifier.hpp"
#include "polmax/spectrum_modes.hpp"
#include "polmax/trig_series.hpp"
#include "test_support.hpp"

using namespace polmax;
namespace ov = polmax::oracle_values;

TEST_CASE("sigma examples") {
  const auto s = enumerate_sigma(1, 1, 1, 1, 1, 40);
  CHECK(s.front().value == 0.0);
  bool pi2 = false;
  int four = 0;
  for (const SpectrumEntry& e : s) {
    if (e.k1 == 0 && e.k2 == 0 && e.k3 == 1) pi2 = e.value == doctest::Approx(ov::kPiSquared).epsilon(1e-15);
    if (std::abs(e.value - ov::kFourPiSquared) < 1e-12) ++four;
  }
  CHECK(pi2);
  CHECK(four == 3);
  const auto scaled = enumerate_sigma(1, 1, 1, 4, 1, 40);
  CHECK(scaled[1].value == doctest::Approx(ov::kPiSquared / 4).epsilon(1e-15));
  CHECK(enumerate_sigma(1, 1, 1, 1, 1, 9.0).size() == 1);
}

TEST_CASE("unit cube spectrum matches the frozen table") {
  const auto s = maxwell_spectrum(test::unit_cube(), PhysicalParams{}, 40);
  REQUIRE(s.size() == std::size(ov::kUnitCubeSpectrum40));
  for (std::size_t q = 0; q < s.size(); ++q) {
    const auto& want = ov::kUnitCubeSpectrum40[q];
    CHECK(s[q].k1 == want.k1);
    CHECK(s[q].k2 == want.k2);
    CHECK(s[q].k3 == want.k3);
    CHECK(s[q].provenance == want.prov);
    CHECK(std::abs(s[q].value - want.value) <= 1e-14 * std::max(1.0, want.value));
  }
  CHECK(maxwell_spectrum(test::unit_cube(), PhysicalParams{}, 0).size() == 3);
}

TEST_CASE("asymmetric blocks carry their own entries") {
  const auto s = maxwell_spectrum(test::asym_domain(), PhysicalParams{}, 30);
  bool found = false;
  for (const SpectrumEntry& e : s)
    if (e.provenance == Provenance::Upper && e.k1 == 0 && e.k2 == 0 && e.k3 == 1) {
      found = true;
      CHECK(e.value == doctest::Approx(ov::kUpperAsym001).epsilon(1e-14));
    }
  CHECK(found);
}

TEST_CASE("entry values recompute exactly and sort deterministically") {
  const DomainSpec d = test::asym_domain();
  const PhysicalParams p = test::params_w2(3.0, 2.0, 0.5);
  const auto s = maxwell_spectrum(d, p, 400);
  for (std::size_t q = 0; q < s.size(); ++q) {
    CHECK(entry_value(s[q], d, p) == s[q].value);
    if (q > 0) CHECK_FALSE(spectrum_less(s[q], s[q - 1]));
  }
  for (const SpectrumEntry& a : axial_spectrum(d, p, 400)) {
    bool in = false;
    for (const SpectrumEntry& e : s) in = in || e.value == a.value;
    CHECK(in);
  }
}

TEST_CASE("resonance_check") {
  const DomainSpec d{1.0, 1.0, 0.6, 0.4};
  const auto r = resonance_check(test::params_w2(ov::kPiSquared), d, 1e-8);
  CHECK(r.resonant);
  CHECK(r.nearest.k3 == 1);
  CHECK(r.nearest.provenance == Provenance::Full);
  const auto q = resonance_check(test::params_w2(5.0), d, 1e-8);
  CHECK_FALSE(q.resonant);
  CHECK(q.dist_to_sigma_M == doctest::Approx(ov::kDistOmega2Five).epsilon(1e-14));
  const auto a = resonance_check(test::params_w2(ov::kFourPiSquared), d, 1e-8);
  CHECK(a.dist_to_sigma_l1 < 1e-12);
  CHECK(a.resonant_axial);
}

TEST_CASE("bulk (0,0,1) closed form") {
  const DomainSpec d{1.0, 1.0, 0.6, 0.4};
  const ModeFields m = eigenmode(d, PhysicalParams{}, ModeCase::Bulk, {0, 0, 1});
  CHECK(m.params.omega == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(std::abs(evaluate(m.E.c[1], d, 0.2, 0.3, 0.0) - ov::kBulk001E2At0) < 1e-13);
  CHECK(std::abs(evaluate(m.H.c[0], d, 0.2, 0.3, 0.0) - cplx(0.0, ov::kBulk001H1ImAt0)) < 1e-13);
  CHECK(is_zero(simplify(curl(m.E, d).c[0] + cplx(0, -m.params.omega) * m.H.c[0])));
}

TEST_CASE("half modes live on one block") {
  const DomainSpec d = test::asym_domain();
  const ModeFields m = eigenmode(d, PhysicalParams{}, ModeCase::Upper, {0, 0, 1});
  for (const auto& c : m.E.c)
    for (const TrigTerm& t : c.terms) CHECK(t.fam == Family::Upper);
  CHECK(max_jump(m.H.c[0], d) == 0.0);
  CHECK_THROWS_AS(eigenmode(d, PhysicalParams{}, ModeCase::Upper, {1, 0, 0}), DegenerateMode);
}

TEST_CASE("degenerate inputs") {
  const DomainSpec d = test::unit_cube();
  CHECK_THROWS_AS(eigenmode(d, PhysicalParams{}, ModeCase::Bulk, {0, 0, 0}), DegenerateMode);
  CHECK_THROWS_AS(eigenmode(d, PhysicalParams{}, ModeCase::Bulk, {1, 0, 0}), DegenerateMode);
  CHECK(mode_case_from_string("lower") == ModeCase::Lower);
  CHECK_THROWS(mode_case_from_string("side"));
}

TEST_CASE("full reflection jumps in H1") {
  const DomainSpec d = test::unit_cube();
  const ModeFields m = full_reflection_mode(d, PhysicalParams{}, ModeCase::Upper, {0, 0, 1});
  CHECK(max_jump(m.H.c[0], d) > 0.1);
  CHECK(max_trace(m.E.c[0], d, TraceLocation::GammaPlus) == 0.0);
  CHECK(max_trace(m.E.c[1], d, TraceLocation::GammaPlus) == 0.0);
}

TEST_CASE("helmholtz-only frequency") {
  const DomainSpec d = test::unit_cube();
  CHECK(helmholtz_only_mode(d, PhysicalParams{}, 2).entry.value == doctest::Approx(4 * ov::kFourPiSquared));
  CHECK(helmholtz_only_mode(d, PhysicalParams{}, 1).entry.provenance == Provenance::Axial);
  CHECK_THROWS(helmholtz_only_mode(d, PhysicalParams{}, 0));
}
