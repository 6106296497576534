#include "polmax/sources.hpp"

#include <cmath>

namespace polmax {

X3Kind potential_kind(Potential pot, int k1) {
  if (pot == Potential::X0) return k1 == 0 ? X3Kind::SineFull : X3Kind::SineHalf;
  return k1 == 0 ? X3Kind::CosineHalf : X3Kind::CosineFull;
}

SpectralScalar fourier_nodal(const ScalarField& f) { return analyze(f, {X3Kind::Nodal, f.block}); }
ScalarField from_fourier_nodal(const SpectralScalar& s) { return synthesize(s); }

namespace {

void check_vector(const VectorField& f) {
  for (const ScalarField& c : f.c)
    if (c.block != Block::Both || !same_grid(c.grid, f.c[0].grid) || c.samples.size() != c.grid.size())
      throw BasisError(BasisErrc::ShapeMismatch, "source components must share one grid and cover both blocks");
}

// analysis coefficients of the three components in the two potential kinds
// (components 1, 2) and their parity flips (component 3)
struct Analysed {
  std::array<SpectralScalar, 2> c1, c2, c3;
};

Analysed analyse(const VectorField& f, Potential pot) {
  Analysed a;
  const X3Kind kinds[2] = {potential_kind(pot, 0), potential_kind(pot, 1)};
  for (int q = 0; q < 2; ++q) {
    a.c1[q] = analyze(f.c[0], {kinds[q], Block::Both});
    a.c2[q] = analyze(f.c[1], {kinds[q], Block::Both});
    a.c3[q] = analyze(f.c[2], {parity_flip(kinds[q]), Block::Both});
  }
  return a;
}

// index in the flipped basis of mode i, or -1 when d3 maps it to zero
int flipped_index(const X3Segment& s, int i) { return s.sine ? i + 1 : i - 1; }

bool in_test_space(const X3Segment& s, int i) { return !(s.sine && i == s.N - 1); }

template <class Visit>
void for_each_potential_mode(const Grid& g, Potential pot, Visit&& visit) {
  const double l1 = g.domain.l1, l2 = g.domain.l2;
  for (int k1 = 0; k1 < g.n1; ++k1) {
    if (is_nyquist(k1, g.n1)) continue;
    const int q = k1 == 0 ? 0 : 1;
    const X3Kind kind = potential_kind(pot, k1);
    const auto segs = x3_segments(g, {kind, Block::Both});
    for (int k2 = 0; k2 < g.n2; ++k2) {
      if (is_nyquist(k2, g.n2)) continue;
      const double a1 = angular_wavenumber(k1, g.n1, l1), a2 = angular_wavenumber(k2, g.n2, l2);
      for (const X3Segment& s : segs)
        for (int i = 0; i < s.N; ++i) {
          if (!in_test_space(s, i)) continue;
          const double sk = s.deriv_factor(i);
          const double lambda = a1 * a1 + a2 * a2 + sk * sk;
          if (lambda == 0.0) continue;
          visit(q, k1, k2, a1, a2, s, i, sk, lambda);
        }
    }
  }
}

}  // namespace

std::vector<cplx> gradient_pairings(const VectorField& f, Potential pot) {
  check_vector(f);
  const Analysed a = analyse(f, pot);
  std::vector<cplx> out;
  for_each_potential_mode(f.grid(), pot,
                          [&](int q, int k1, int k2, double a1, double a2, const X3Segment& s, int i, double sk,
                              double) {
                            const int idx = s.offset + i;
                            const int j = flipped_index(s, i);
                            cplx v = cplx(0.0, -a1) * a.c1[q].at(k1, k2, idx) + cplx(0.0, -a2) * a.c2[q].at(k1, k2, idx);
                            if (j >= 0 && j < s.N) v += sk * a.c3[q].at(k1, k2, s.offset + j);
                            out.push_back(v);
                          });
  return out;
}

double max_gradient_pairing(const VectorField& f, Potential pot) {
  double m = 0.0;
  for (const cplx& v : gradient_pairings(f, pot)) m = std::max(m, std::abs(v));
  return m;
}

Decomposition project(const VectorField& f, Potential pot) {
  check_vector(f);
  const Grid& g = f.grid();
  const Analysed a = analyse(f, pot);
  std::array<SpectralScalar, 2> g1, g2, g3;
  for (int q = 0; q < 2; ++q) {
    const X3Kind kind = potential_kind(pot, q);
    g1[q] = SpectralScalar::zeros(g, {kind, Block::Both});
    g2[q] = SpectralScalar::zeros(g, {kind, Block::Both});
    g3[q] = SpectralScalar::zeros(g, {parity_flip(kind), Block::Both});
  }
  for_each_potential_mode(g, pot,
                          [&](int q, int k1, int k2, double a1, double a2, const X3Segment& s, int i, double sk,
                              double lambda) {
                            const int idx = s.offset + i;
                            const int j = flipped_index(s, i);
                            const bool has3 = j >= 0 && j < s.N;
                            cplx rhs = cplx(0.0, -a1) * a.c1[q].at(k1, k2, idx) +
                                       cplx(0.0, -a2) * a.c2[q].at(k1, k2, idx);
                            if (has3) rhs += sk * a.c3[q].at(k1, k2, s.offset + j);
                            const cplx phi = rhs / lambda;
                            g1[q].at(k1, k2, idx) = cplx(0.0, a1) * phi;
                            g2[q].at(k1, k2, idx) = cplx(0.0, a2) * phi;
                            if (has3) g3[q].at(k1, k2, s.offset + j) = sk * phi;
                          });
  Decomposition d;
  d.grad.c[0] = synthesize(g1[0]) + synthesize(g1[1]);
  d.grad.c[1] = synthesize(g2[0]) + synthesize(g2[1]);
  d.grad.c[2] = synthesize(g3[0]) + synthesize(g3[1]);
  d.tilde = f - d.grad;
  return d;
}

WeakRhs assemble_weak_rhs(const SourcePair& src, const PhysicalParams& p) {
  check_vector(src.f_h);
  check_vector(src.f_e);
  if (!same_grid(src.f_h.grid(), src.f_e.grid()))
    throw BasisError(BasisErrc::ShapeMismatch, "f_h and f_e live on different grids");
  const Grid& g = src.grid();
  const double wmu = p.omega * p.mu, weps = p.omega * p.eps;
  const cplx iwmu(0.0, wmu), iweps(0.0, weps);

  WeakRhs r;
  // F_E1(b) = i w mu <(f_e)1, b> + <(f_h)2, d3 b> - <(f_h)3, d2 b>,  b in SineHalf
  {
    const auto fe1 = analyze(src.f_e.c[0], {X3Kind::SineHalf, Block::Both});
    const auto fh2 = analyze(src.f_h.c[1], {X3Kind::CosineHalf, Block::Both});
    const auto fh3 = analyze(src.f_h.c[2], {X3Kind::SineHalf, Block::Both});
    r.F_E1 = SpectralScalar::zeros(g, {X3Kind::SineHalf, Block::Both});
    const auto segs = x3_segments(g, r.F_E1.basis);
    for (int k1 = 0; k1 < g.n1; ++k1)
      for (int k2 = 0; k2 < g.n2; ++k2) {
        const double a2 = derivative_multiplier(k2, g.n2, g.domain.l2).imag();
        for (const X3Segment& s : segs)
          for (int i = 0; i < s.N; ++i) {
            const int idx = s.offset + i;
            cplx v = iwmu * fe1.at(k1, k2, idx) + cplx(0.0, a2) * fh3.at(k1, k2, idx);
            if (i + 1 < s.N) v += s.deriv_factor(i) * fh2.at(k1, k2, idx + 1);
            r.F_E1.at(k1, k2, idx) = v;
          }
      }
  }
  // F_H1(b) = -i w eps <(f_h)1, b> + <(f_e)2, d3 b> - <(f_e)3, d2 b>,  b in CosineFull
  {
    const auto fh1 = analyze(src.f_h.c[0], {X3Kind::CosineFull, Block::Both});
    const auto fe2 = analyze(src.f_e.c[1], {X3Kind::SineFull, Block::Both});
    const auto fe3 = analyze(src.f_e.c[2], {X3Kind::CosineFull, Block::Both});
    r.F_H1 = SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both});
    const X3Segment s = x3_segments(g, r.F_H1.basis).front();
    for (int k1 = 0; k1 < g.n1; ++k1)
      for (int k2 = 0; k2 < g.n2; ++k2) {
        const double a2 = derivative_multiplier(k2, g.n2, g.domain.l2).imag();
        for (int i = 0; i < s.N; ++i) {
          cplx v = -iweps * fh1.at(k1, k2, i) + cplx(0.0, a2) * fe3.at(k1, k2, i);
          if (i > 0) v += s.deriv_factor(i) * fe2.at(k1, k2, i - 1);
          r.F_H1.at(k1, k2, i) = v;
        }
      }
  }
  // transverse forms: test-side d1 becomes the conjugate multiplier -i a1
  const auto fh2 = fourier_nodal(src.f_h.c[1]), fh3 = fourier_nodal(src.f_h.c[2]);
  const auto fe2 = fourier_nodal(src.f_e.c[1]), fe3 = fourier_nodal(src.f_e.c[2]);
  r.F_E2 = r.F_H2 = r.F_E3 = r.F_H3 = SpectralScalar::zeros(g, {X3Kind::Nodal, Block::Both});
  for (int k1 = 0; k1 < g.n1; ++k1) {
    const cplx ia1 = derivative_multiplier(k1, g.n1, g.domain.l1);
    for (int k2 = 0; k2 < g.n2; ++k2)
      for (int m = 0; m < g.n3(); ++m) {
        r.F_E2.at(k1, k2, m) = -ia1 * fh3.at(k1, k2, m) + iwmu * fe2.at(k1, k2, m);
        r.F_H2.at(k1, k2, m) = -ia1 * fe3.at(k1, k2, m) - iweps * fh2.at(k1, k2, m);
        r.F_E3.at(k1, k2, m) = ia1 * fh2.at(k1, k2, m) + iwmu * fe3.at(k1, k2, m);
        r.F_H3.at(k1, k2, m) = ia1 * fe2.at(k1, k2, m) - iweps * fh3.at(k1, k2, m);
      }
  }
  return r;
}

}  // namespace polmax
