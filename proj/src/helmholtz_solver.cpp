#include "polmax/helmholtz_solver.hpp"

#include <chrono>
#include <cmath>

#include <fmt/format.h>

namespace polmax {

namespace {

[[noreturn]] void refuse(const SpectrumEntry& e, double rel, bool axial) {
  const std::string msg = fmt::format("{}: omega^2 is within relative distance {:.3e} of eigenvalue {:.17g} at ({},{},{}, {})",
                                      axial ? "ResonantAxialFrequency" : "ResonantFrequency", rel, e.value, e.k1, e.k2,
                                      e.k3, to_string(e.provenance));
  if (axial) throw ResonantAxialFrequency(e, rel, msg);
  throw ResonantFrequency(e, rel, msg);
}

// lambda - kappa for one mode, refusing near-zero denominators
double shifted(double lambda, double kappa, double tol, const SpectrumEntry& e, bool axial) {
  const double d = lambda - kappa;
  if (std::abs(d) < tol * kappa) refuse(e, std::abs(d) / kappa, axial);
  return d;
}

bool nyquist_column(const Grid& g, int k1, int k2) { return is_nyquist(k1, g.n1) || is_nyquist(k2, g.n2); }

}  // namespace

AxialSolution solve_axial(const WeakRhs& rhs, const PhysicalParams& p, double tol, SolveReport* report) {
  const Grid& g = rhs.F_E1.grid;
  const double kappa = p.kappa();
  const double scale = p.eps * p.mu;  // lambda / scale is in omega^2 units
  AxialSolution out;
  out.E1 = SpectralScalar::zeros(g, {X3Kind::SineHalf, Block::Both});
  out.H1 = SpectralScalar::zeros(g, {X3Kind::CosineFull, Block::Both});
  std::size_t ne = 0, nh = 0;
  const auto e_segs = x3_segments(g, out.E1.basis);
  const X3Segment h_seg = x3_segments(g, out.H1.basis).front();
  for (int k1 = 0; k1 < g.n1; ++k1)
    for (int k2 = 0; k2 < g.n2; ++k2) {
      if (nyquist_column(g, k1, k2)) continue;
      const double a1 = angular_wavenumber(k1, g.n1, g.domain.l1), a2 = angular_wavenumber(k2, g.n2, g.domain.l2);
      const int s1 = std::abs(signed_wavenumber(k1, g.n1)), s2 = std::abs(signed_wavenumber(k2, g.n2));
      for (const X3Segment& s : e_segs)
        for (int i = 0; i + 1 < s.N; ++i) {
          const double q = kPi * s.mode_number(i) / s.L;
          const double lambda = a1 * a1 + a2 * a2 + q * q;
          const SpectrumEntry e{lambda / scale, s1, s2, s.mode_number(i),
                                s.block == Block::Upper ? Provenance::Upper : Provenance::Lower};
          const double d = shifted(lambda, kappa, tol, e, false);
          out.E1.at(k1, k2, s.offset + i) = rhs.F_E1.at(k1, k2, s.offset + i) / d;
          ++ne;
        }
      for (int i = 0; i < h_seg.N; ++i) {
        const double q = kPi * h_seg.mode_number(i) / h_seg.L;
        const double lambda = a1 * a1 + a2 * a2 + q * q;
        const SpectrumEntry e{lambda / scale, s1, s2, i, Provenance::Full};
        const double d = shifted(lambda, kappa, tol, e, false);
        out.H1.at(k1, k2, i) = rhs.F_H1.at(k1, k2, i) / d;
        ++nh;
      }
    }
  if (report) {
    report->e1_modes = ne;
    report->h1_modes = nh;
  }
  return out;
}

TransverseSolution solve_transverse(const AxialSolution& axial, const WeakRhs& rhs, const PhysicalParams& p,
                                    double tol, SolveReport* report) {
  const Grid& g = axial.E1.grid;
  const double kappa = p.kappa();
  const cplx iwmu(0.0, p.omega * p.mu), iweps(0.0, p.omega * p.eps);

  // x3-nodal carriers of E1, H1 and their x3 derivatives
  const SpectralScalar e1 = synthesize_x3(axial.E1), h1 = synthesize_x3(axial.H1);
  const SpectralScalar d3e1 = synthesize_x3(derivative(axial.E1, 3)), d3h1 = synthesize_x3(derivative(axial.H1, 3));

  TransverseSolution out;
  out.E2 = out.E3 = out.H2 = out.H3 = SpectralScalar::zeros(g, {X3Kind::Nodal, Block::Both});
  std::size_t cols = 0;
  for (int k1 = 0; k1 < g.n1; ++k1) {
    if (is_nyquist(k1, g.n1)) continue;
    const double a1 = angular_wavenumber(k1, g.n1, g.domain.l1);
    const cplx ia1(0.0, a1);
    const SpectrumEntry e{a1 * a1 / (p.eps * p.mu), std::abs(signed_wavenumber(k1, g.n1)), 0, 0, Provenance::Axial};
    const double d = a1 * a1 - kappa;
    if (std::abs(d) < tol * kappa) refuse(e, std::abs(d) / kappa, true);
    for (int k2 = 0; k2 < g.n2; ++k2) {
      if (is_nyquist(k2, g.n2)) continue;
      const cplx ia2 = derivative_multiplier(k2, g.n2, g.domain.l2);
      for (int m = 0; m < g.n3(); ++m) {
        const cplx d2e1 = ia2 * e1.at(k1, k2, m), d2h1 = ia2 * h1.at(k1, k2, m);
        const cplx de1 = d3e1.at(k1, k2, m), dh1 = d3h1.at(k1, k2, m);
        out.E2.at(k1, k2, m) = (-ia1 * d2e1 - iwmu * dh1 + rhs.F_E2.at(k1, k2, m)) / d;
        out.H2.at(k1, k2, m) = (-ia1 * d2h1 + iweps * de1 + rhs.F_H2.at(k1, k2, m)) / d;
        out.E3.at(k1, k2, m) = (-ia1 * de1 + iwmu * d2h1 + rhs.F_E3.at(k1, k2, m)) / d;
        out.H3.at(k1, k2, m) = (-ia1 * dh1 - iweps * d2e1 + rhs.F_H3.at(k1, k2, m)) / d;
      }
      ++cols;
    }
  }
  if (report) report->transverse_columns = cols;
  return out;
}

SolveResult solve(const SourcePair& src, const PhysicalParams& p, double tol) {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid& g = src.grid();
  SolveResult res;
  res.report.resonance = resonance_check(p, g.domain, tol);
  const ResonanceDiagnostic& rc = res.report.resonance;
  if (rc.resonant_axial) refuse(rc.nearest_axial, rc.rel_sigma_l1, true);
  if (rc.resonant) refuse(rc.nearest, rc.rel_sigma_M, false);

  const Decomposition de = project_e(src.f_e), dh = project_h(src.f_h);
  const WeakRhs rhs = assemble_weak_rhs({dh.tilde, de.tilde}, p);
  const AxialSolution ax = solve_axial(rhs, p, tol, &res.report);
  const TransverseSolution tr = solve_transverse(ax, rhs, p, tol, &res.report);

  const cplx ge = 1.0 / cplx(0.0, p.omega * p.eps), gh = -1.0 / cplx(0.0, p.omega * p.mu);
  FieldPair& f = res.fields;
  f.c[E1] = synthesize(ax.E1) + ge * de.grad.c[0];
  f.c[E2] = synthesize(tr.E2) + ge * de.grad.c[1];
  f.c[E3] = synthesize(tr.E3) + ge * de.grad.c[2];
  f.c[H1] = synthesize(ax.H1) + gh * dh.grad.c[0];
  f.c[H2] = synthesize(tr.H2) + gh * dh.grad.c[1];
  f.c[H3] = synthesize(tr.H3) + gh * dh.grad.c[2];
  f.layout = {X3Kind::SineHalf, X3Kind::Nodal, X3Kind::Nodal, X3Kind::CosineFull, X3Kind::Nodal, X3Kind::Nodal};
  res.report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace polmax
