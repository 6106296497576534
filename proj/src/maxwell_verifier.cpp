#include "polmax/maxwell_verifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace polmax {

std::vector<double> fd_weights(const std::vector<double>& x, double x0) {
  // Fornberg's recursion, derivative orders 0 and 1
  const int n = static_cast<int>(x.size());
  std::vector<std::array<double, 2>> c(n, {0.0, 0.0});
  double c1 = 1.0, c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, 1);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][1];
  return w;
}

namespace {

struct Stencil {
  int start;
  std::vector<double> w;
};

std::vector<Stencil> block_stencils(int N, double h) {
  const int p = std::min(kFdOrder + 1, N);
  std::vector<Stencil> out(N);
  for (int m = 0; m < N; ++m) {
    const int s = std::clamp(m - p / 2, 0, N - p);
    std::vector<double> nodes(p);
    for (int q = 0; q < p; ++q) nodes[q] = s + q;
    out[m].start = s;
    out[m].w = fd_weights(nodes, m);
    for (double& v : out[m].w) v /= h;
  }
  return out;
}

}  // namespace

ScalarField fd_d3(const ScalarField& f) {
  const Grid& g = f.grid;
  ScalarField out = ScalarField::zeros(g, f.block);
  std::vector<Block> blocks =
      f.block == Block::Both ? std::vector<Block>{Block::Lower, Block::Upper} : std::vector<Block>{f.block};
  for (Block b : blocks) {
    const int N = g.n3_of(b);
    const int m0 = f.block == Block::Both ? g.m0_of(b) : 0;
    const auto st = block_stencils(N, g.h);
    for (int j1 = 0; j1 < g.n1; ++j1)
      for (int j2 = 0; j2 < g.n2; ++j2)
        for (int m = 0; m < N; ++m) {
          cplx acc{};
          const Stencil& s = st[m];
          for (std::size_t q = 0; q < s.w.size(); ++q) acc += s.w[q] * f.at(j1, j2, m0 + s.start + static_cast<int>(q));
          out.at(j1, j2, m0 + m) = acc;
        }
  }
  return out;
}

ScalarField d3_field(const ScalarField& f, X3Kind layout) {
  if (layout == X3Kind::Nodal) return fd_d3(f);
  return synthesize(derivative(analyze(f, {layout, f.block}), 3));
}

ScalarField d_horizontal(const ScalarField& f, int axis) {
  return synthesize(derivative(analyze(f, {X3Kind::Nodal, f.block}), axis));
}

double ResidualReport::faraday_norm() const { return std::hypot(faraday[0], faraday[1]); }
double ResidualReport::ampere_norm() const { return std::hypot(ampere[0], ampere[1]); }

namespace {
double rel(double v, double s) { return s > 0.0 ? v / s : v; }
}  // namespace

double ResidualReport::faraday_relative() const {
  return rel(faraday_norm(), std::hypot(faraday_scale[0], faraday_scale[1]));
}
double ResidualReport::ampere_relative() const {
  return rel(ampere_norm(), std::hypot(ampere_scale[0], ampere_scale[1]));
}

const TraceValue& ResidualReport::trace(const std::string& name) const {
  for (const TraceValue& t : traces)
    if (t.name == name) return t;
  throw std::out_of_range("no trace check named " + name);
}

namespace {

void check_shapes(const FieldPair& f, const SourcePair& s) {
  const Grid& g = f.grid();
  for (const ScalarField& c : f.c)
    if (!same_grid(c.grid, g) || c.block != Block::Both || c.samples.size() != g.size())
      throw BasisError(BasisErrc::ShapeMismatch, "field components must share one grid and cover both blocks");
  for (const VectorField* v : {&s.f_h, &s.f_e})
    for (const ScalarField& c : v->c)
      if (!same_grid(c.grid, g) || c.block != Block::Both || c.samples.size() != g.size())
        throw BasisError(BasisErrc::ShapeMismatch, "sources and fields live on different grids");
}

double block_norm(const VectorField& v, Block b) {
  double acc = 0.0;
  for (const ScalarField& c : v.c) acc += std::pow(l2_norm_block(c, b), 2);
  return std::sqrt(acc);
}

VectorField e_part(const FieldPair& f) { return {{f.c[E1], f.c[E2], f.c[E3]}}; }
VectorField h_part(const FieldPair& f) { return {{f.c[H1], f.c[H2], f.c[H3]}}; }

}  // namespace

void maxwell_residual(const FieldPair& f, const SourcePair& src, const PhysicalParams& p, ResidualReport& r) {
  check_shapes(f, src);
  const auto& L = f.layout;
  VectorField curlE, curlH;
  curlE.c[0] = d_horizontal(f.c[E3], 2) - d3_field(f.c[E2], L[E2]);
  curlE.c[1] = d3_field(f.c[E1], L[E1]) - d_horizontal(f.c[E3], 1);
  curlE.c[2] = d_horizontal(f.c[E2], 1) - d_horizontal(f.c[E1], 2);
  curlH.c[0] = d_horizontal(f.c[H3], 2) - d3_field(f.c[H2], L[H2]);
  curlH.c[1] = d3_field(f.c[H1], L[H1]) - d_horizontal(f.c[H3], 1);
  curlH.c[2] = d_horizontal(f.c[H2], 1) - d_horizontal(f.c[H1], 2);
  const VectorField wmuH = cplx(0.0, p.omega * p.mu) * h_part(f);
  const VectorField wepsE = cplx(0.0, p.omega * p.eps) * e_part(f);
  const VectorField far = curlE - wmuH - src.f_h;
  const VectorField amp = curlH + wepsE - src.f_e;
  const Block blocks[2] = {Block::Lower, Block::Upper};
  for (int q = 0; q < 2; ++q) {
    r.faraday[q] = block_norm(far, blocks[q]);
    r.ampere[q] = block_norm(amp, blocks[q]);
    r.faraday_scale[q] = block_norm(curlE, blocks[q]) + block_norm(wmuH, blocks[q]) + block_norm(src.f_h, blocks[q]);
    r.ampere_scale[q] = block_norm(curlH, blocks[q]) + block_norm(wepsE, blocks[q]) + block_norm(src.f_e, blocks[q]);
  }
  r.fd_order = kFdOrder;
}

namespace {

// composite Gauss-Legendre rule on [a, b]
struct Quadrature {
  std::vector<double> x, w;
};

Quadrature gauss_legendre(double a, double b, int panels, int order) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(order, order);
  for (int i = 1; i < order; ++i) J(i, i - 1) = J(i - 1, i) = i / std::sqrt(4.0 * i * i - 1.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  Quadrature q;
  const double hp = (b - a) / panels;
  for (int pnl = 0; pnl < panels; ++pnl)
    for (int i = 0; i < order; ++i) {
      const double t = es.eigenvalues()(i), wt = 2.0 * std::pow(es.eigenvectors()(0, i), 2);
      q.x.push_back(a + hp * (pnl + 0.5 * (t + 1.0)));
      q.w.push_back(0.5 * hp * wt);
    }
  return q;
}

bool covers(const X3Segment& s, double x) { return x > s.a && x < s.a + s.L; }

// Gram matrices G0[j][k] = int u_j v_k and G1[j][k] = int u_j' v_k' over the
// whole x3 interval, block by block, u from the field layout, v from the test basis
struct Gram {
  int nu = 0, nv = 0;
  std::vector<double> g0, g1;
};

Gram cross_gram(const Grid& g, X3Kind field, X3Kind test) {
  const auto us = x3_segments(g, {field, Block::Both});
  const auto vs = x3_segments(g, {test, Block::Both});
  Gram G;
  G.nu = G.nv = g.n3();
  G.g0.assign(static_cast<std::size_t>(G.nu) * G.nv, 0.0);
  G.g1 = G.g0;
  if (field == test) {
    // orthonormal basis: identity and squared mode frequencies
    for (const X3Segment& s : us)
      for (int i = 0; i < s.N; ++i) {
        const std::size_t q = static_cast<std::size_t>(s.offset + i) * G.nv + s.offset + i;
        const double w = M_PI * s.mode_number(i) / s.L;
        G.g0[q] = 1.0;
        G.g1[q] = w * w;
      }
    return G;
  }
  const DomainSpec& d = g.domain;
  const Quadrature qs[2] = {gauss_legendre(-d.l3_minus, 0.0, g.n3_minus, 20), gauss_legendre(0.0, d.l3_plus, g.n3_plus, 20)};
  for (const Quadrature& q : qs)
    for (std::size_t t = 0; t < q.x.size(); ++t) {
      const double x = q.x[t];
      for (const X3Segment& su : us) {
        if (!covers(su, x)) continue;
        for (const X3Segment& sv : vs) {
          if (!covers(sv, x)) continue;
          std::vector<double> vv(sv.N), dv(sv.N);
          for (int k = 0; k < sv.N; ++k) {
            vv[k] = sv.value(k, x);
            dv[k] = sv.derivative(k, x);
          }
          for (int j = 0; j < su.N; ++j) {
            const double uj = su.value(j, x) * q.w[t], duj = su.derivative(j, x) * q.w[t];
            double* r0 = &G.g0[static_cast<std::size_t>(su.offset + j) * G.nv + sv.offset];
            double* r1 = &G.g1[static_cast<std::size_t>(su.offset + j) * G.nv + sv.offset];
            for (int k = 0; k < sv.N; ++k) {
              r0[k] += uj * vv[k];
              r1[k] += duj * dv[k];
            }
          }
        }
      }
    }
  return G;
}

bool test_mode(const X3Segment& s, int i) { return !(s.sine && i == s.N - 1); }

// dual H1 norm of  b -> <grad u, grad b> - kappa <u, b> - F(b)
double axial_defect(const ScalarField& u, X3Kind layout, X3Kind test, const SpectralScalar& F, double kappa) {
  const Grid& g = u.grid;
  const X3Kind kind = layout == X3Kind::Nodal ? test : layout;
  const SpectralScalar c = analyze(u, {kind, Block::Both});
  const Gram G = cross_gram(g, kind, test);
  const auto ts = x3_segments(g, {test, Block::Both});
  double acc = 0.0;
  std::vector<cplx> pair(G.nv);
  for (int k1 = 0; k1 < g.n1; ++k1)
    for (int k2 = 0; k2 < g.n2; ++k2) {
      if (is_nyquist(k1, g.n1) || is_nyquist(k2, g.n2)) continue;
      const double a1 = angular_wavenumber(k1, g.n1, g.domain.l1), a2 = angular_wavenumber(k2, g.n2, g.domain.l2);
      const double shift = a1 * a1 + a2 * a2 - kappa;
      std::fill(pair.begin(), pair.end(), cplx{});
      for (int j = 0; j < G.nu; ++j) {
        const cplx cj = c.at(k1, k2, j);
        if (cj == cplx{}) continue;
        const double* r0 = &G.g0[static_cast<std::size_t>(j) * G.nv];
        const double* r1 = &G.g1[static_cast<std::size_t>(j) * G.nv];
        for (int k = 0; k < G.nv; ++k) pair[k] += cj * (r1[k] + shift * r0[k]);
      }
      for (const X3Segment& s : ts)
        for (int i = 0; i < s.N; ++i) {
          if (!test_mode(s, i)) continue;
          // test functions normalised in H1
          const double w = M_PI * s.mode_number(i) / s.L;
          acc += std::norm(pair[s.offset + i] - F.at(k1, k2, s.offset + i)) / (1.0 + a1 * a1 + a2 * a2 + w * w);
        }
    }
  return std::sqrt(acc);
}

}  // namespace

std::array<double, 6> weak_helmholtz_residual(const FieldPair& f, const SourcePair& src, const PhysicalParams& p) {
  check_shapes(f, src);
  const Grid& g = f.grid();
  const Decomposition de = project_e(src.f_e), dh = project_h(src.f_h);
  const WeakRhs rhs = assemble_weak_rhs({dh.tilde, de.tilde}, p);
  const cplx ge = 1.0 / cplx(0.0, p.omega * p.eps), gh = 1.0 / cplx(0.0, p.omega * p.mu);
  FieldPair t = f;
  for (int i = 0; i < 3; ++i) {
    t.c[i] = f.c[i] - ge * de.grad.c[i];
    t.c[3 + i] = f.c[3 + i] + gh * dh.grad.c[i];
  }
  const double kappa = p.kappa();
  std::array<double, 6> out{};
  out[E1] = axial_defect(t.c[E1], t.layout[E1], X3Kind::SineHalf, rhs.F_E1, kappa);
  out[H1] = axial_defect(t.c[H1], t.layout[H1], X3Kind::CosineFull, rhs.F_H1, kappa);

  const SpectralScalar e1 = fourier_nodal(t.c[E1]), h1 = fourier_nodal(t.c[H1]);
  const SpectralScalar d3e1 = fourier_nodal(d3_field(t.c[E1], t.layout[E1]));
  const SpectralScalar d3h1 = fourier_nodal(d3_field(t.c[H1], t.layout[H1]));
  const SpectralScalar e2 = fourier_nodal(t.c[E2]), e3 = fourier_nodal(t.c[E3]);
  const SpectralScalar h2 = fourier_nodal(t.c[H2]), h3 = fourier_nodal(t.c[H3]);
  const cplx iwmu(0.0, p.omega * p.mu), iweps(0.0, p.omega * p.eps);
  double acc[4] = {0, 0, 0, 0};
  for (int k1 = 0; k1 < g.n1; ++k1) {
    if (is_nyquist(k1, g.n1)) continue;
    const double a1 = angular_wavenumber(k1, g.n1, g.domain.l1);
    const cplx ia1(0.0, a1);
    const double d = a1 * a1 - kappa;
    for (int k2 = 0; k2 < g.n2; ++k2) {
      if (is_nyquist(k2, g.n2)) continue;
      const cplx ia2 = derivative_multiplier(k2, g.n2, g.domain.l2);
      for (int m = 0; m < g.n3(); ++m) {
        const cplx d2e1 = ia2 * e1.at(k1, k2, m), d2h1 = ia2 * h1.at(k1, k2, m);
        const cplx de1 = d3e1.at(k1, k2, m), dh1 = d3h1.at(k1, k2, m);
        acc[0] += std::norm(d * e2.at(k1, k2, m) + ia1 * d2e1 + iwmu * dh1 - rhs.F_E2.at(k1, k2, m));
        acc[1] += std::norm(d * h2.at(k1, k2, m) + ia1 * d2h1 - iweps * de1 - rhs.F_H2.at(k1, k2, m));
        acc[2] += std::norm(d * e3.at(k1, k2, m) + ia1 * de1 - iwmu * d2h1 - rhs.F_E3.at(k1, k2, m));
        acc[3] += std::norm(d * h3.at(k1, k2, m) + ia1 * dh1 + iweps * d2e1 - rhs.F_H3.at(k1, k2, m));
      }
    }
  }
  out[E2] = std::sqrt(acc[0] * g.h);
  out[H2] = std::sqrt(acc[1] * g.h);
  out[E3] = std::sqrt(acc[2] * g.h);
  out[H3] = std::sqrt(acc[3] * g.h);
  return out;
}

namespace {

// horizontal L2 norm of a trace given as nodal values over (j1, j2)
double horizontal_norm(const std::vector<cplx>& v, const Grid& g) {
  double acc = 0.0;
  for (const cplx& x : v) acc += std::norm(x);
  return std::sqrt(acc * g.dx1() * g.dx2());
}

double spectrum_norm(const Spectrum2D& s) {
  double acc = 0.0;
  for (const cplx& x : s.coeffs) acc += std::norm(x);
  return std::sqrt(acc);
}

// quadratic extrapolation from the three midpoints nearest the location
std::vector<cplx> extrapolate(const ScalarField& f, TraceLocation where) {
  const Grid& g = f.grid;
  static constexpr double w[3] = {15.0 / 8.0, -10.0 / 8.0, 3.0 / 8.0};
  int m0 = 0, step = 1;
  switch (where) {
    case TraceLocation::GammaPlus: m0 = g.n3_minus; step = 1; break;
    case TraceLocation::GammaMinus: m0 = g.n3_minus - 1; step = -1; break;
    case TraceLocation::Top: m0 = g.n3() - 1; step = -1; break;
    case TraceLocation::Bottom: m0 = 0; step = 1; break;
  }
  std::vector<cplx> out(static_cast<std::size_t>(g.n1) * g.n2);
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int j2 = 0; j2 < g.n2; ++j2) {
      cplx acc{};
      for (int q = 0; q < 3; ++q) acc += w[q] * f.at(j1, j2, m0 + q * step);
      out[static_cast<std::size_t>(j1) * g.n2 + j2] = acc;
    }
  return out;
}

std::vector<cplx> evaluate_2d(const Spectrum2D& s, const Grid& g) {
  const double nrm = 1.0 / std::sqrt(g.domain.l1 * g.domain.l2);
  std::vector<cplx> v(static_cast<std::size_t>(g.n1) * g.n2);
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int j2 = 0; j2 < g.n2; ++j2) {
      cplx acc{};
      for (int k1 = 0; k1 < g.n1; ++k1)
        for (int k2 = 0; k2 < g.n2; ++k2)
          acc += s.at(k1, k2) * std::polar(1.0, 2.0 * kPi * (static_cast<double>((k1 * j1) % g.n1) / g.n1 +
                                                             static_cast<double>((k2 * j2) % g.n2) / g.n2));
      v[static_cast<std::size_t>(j1) * g.n2 + j2] = nrm * acc;
    }
  return v;
}

// field trace either from the series (tagged) or extrapolated (nodal)
struct TraceData {
  bool spectral;
  Spectrum2D spec;
  std::vector<cplx> nodal;
};

TraceData trace_of(const ScalarField& f, X3Kind layout, TraceLocation where) {
  if (layout != X3Kind::Nodal) return {true, trace_x3(analyze(f, {layout, Block::Both}), where), {}};
  return {false, {}, extrapolate(f, where)};
}

double trace_norm(const TraceData& t, const Grid& g) {
  return t.spectral ? spectrum_norm(t.spec) : horizontal_norm(t.nodal, g);
}

double jump_norm(const TraceData& up, const TraceData& lo, const Grid& g) {
  if (up.spectral && lo.spectral) {
    Spectrum2D d = up.spec;
    for (std::size_t q = 0; q < d.coeffs.size(); ++q) d.coeffs[q] -= lo.spec.coeffs[q];
    return spectrum_norm(d);
  }
  auto nodal = [&](const TraceData& t) { return t.spectral ? evaluate_2d(t.spec, g) : t.nodal; };
  const std::vector<cplx> a = nodal(up), b = nodal(lo);
  std::vector<cplx> d(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) d[q] = a[q] - b[q];
  return horizontal_norm(d, g);
}

// rms magnitude of the whole field pair, for relative gating of extrapolated values
double trace_scale(const FieldPair& f) {
  double acc = 0.0;
  for (const ScalarField& c : f.c) acc += std::pow(l2_norm(c), 2);
  return std::sqrt(acc / f.grid().domain.l3());
}

}  // namespace

std::vector<TraceValue> trace_checks(const FieldPair& f, const SourcePair& src, const PhysicalParams& p) {
  check_shapes(f, src);
  const Grid& g = f.grid();
  const auto& L = f.layout;
  std::vector<TraceValue> out;
  const double scale = trace_scale(f);
  auto single = [&](const std::string& name, int c, TraceLocation where) {
    const TraceData t = trace_of(f.c[c], L[c], where);
    out.push_back({name, trace_norm(t, g), t.spectral, scale});
  };
  {
    const TraceData up = trace_of(f.c[E1], L[E1], TraceLocation::GammaPlus);
    const TraceData lo = trace_of(f.c[E1], L[E1], TraceLocation::GammaMinus);
    out.push_back({"E1_Gamma", std::hypot(trace_norm(up, g), trace_norm(lo, g)), up.spectral, scale});
  }
  auto jump = [&](const std::string& name, const ScalarField& c, X3Kind layout) {
    const TraceData up = trace_of(c, layout, TraceLocation::GammaPlus);
    const TraceData lo = trace_of(c, layout, TraceLocation::GammaMinus);
    out.push_back({name, jump_norm(up, lo, g), up.spectral, scale});
  };
  jump("jump_H1", f.c[H1], L[H1]);
  jump("jump_E2", f.c[E2], L[E2]);
  if (max_abs(src.f_h.c[2]) == 0.0) {
    jump("jump_H3", f.c[H3], L[H3]);
  } else {
    // normal component of curl E: H3 + (i w mu)^-1 (f_h)3
    jump("jump_H3", f.c[H3] + (1.0 / cplx(0.0, p.omega * p.mu)) * src.f_h.c[2], X3Kind::Nodal);
  }
  single("E1_top", E1, TraceLocation::Top);
  single("E1_bottom", E1, TraceLocation::Bottom);
  single("E2_top", E2, TraceLocation::Top);
  single("E2_bottom", E2, TraceLocation::Bottom);
  return out;
}

ResidualReport verify(const FieldPair& f, const SourcePair& src, const PhysicalParams& p) {
  ResidualReport r;
  maxwell_residual(f, src, p, r);
  r.helmholtz_weak = weak_helmholtz_residual(f, src, p);
  r.traces = trace_checks(f, src, p);
  r.div_E_pairing = max_gradient_pairing(e_part(f), Potential::X0);
  r.div_H_pairing = max_gradient_pairing(h_part(f), Potential::Y0);
  return r;
}

std::vector<std::string> failing_checks(const ResidualReport& r, const Tolerances& tol) {
  std::vector<std::string> bad;
  if (r.faraday_relative() > tol.strong) bad.push_back("faraday");
  if (r.ampere_relative() > tol.strong) bad.push_back("ampere");
  for (int c = 0; c < 6; ++c)
    if (!(r.helmholtz_weak[c] <= tol.weak)) bad.push_back(std::string("weak_") + comp_name(c));
  for (const TraceValue& t : r.traces) {
    const bool ok = t.spectral ? t.value <= tol.trace : t.relative() <= tol.interp;
    if (!ok) bad.push_back(t.name);
  }
  return bad;
}

}  // namespace polmax
