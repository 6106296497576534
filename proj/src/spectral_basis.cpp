#include "polmax/spectral_basis.hpp"

#include <cmath>

#include <fmt/format.h>

namespace polmax {

const char* to_string(X3Kind k) {
  switch (k) {
    case X3Kind::Nodal: return "nodal";
    case X3Kind::SineHalf: return "sine_half";
    case X3Kind::CosineHalf: return "cosine_half";
    case X3Kind::SineFull: return "sine_full";
    case X3Kind::CosineFull: return "cosine_full";
  }
  return "nodal";
}

X3Kind x3kind_from_string(const std::string& s) {
  for (X3Kind k : {X3Kind::Nodal, X3Kind::SineHalf, X3Kind::CosineHalf, X3Kind::SineFull, X3Kind::CosineFull})
    if (s == to_string(k)) return k;
  throw BasisError(BasisErrc::ShapeMismatch, "unknown x3 layout '" + s + "'");
}

bool is_sine(X3Kind k) { return k == X3Kind::SineHalf || k == X3Kind::SineFull; }
bool is_half(X3Kind k) { return k == X3Kind::SineHalf || k == X3Kind::CosineHalf; }

X3Kind parity_flip(X3Kind k) {
  switch (k) {
    case X3Kind::SineHalf: return X3Kind::CosineHalf;
    case X3Kind::CosineHalf: return X3Kind::SineHalf;
    case X3Kind::SineFull: return X3Kind::CosineFull;
    case X3Kind::CosineFull: return X3Kind::SineFull;
    case X3Kind::Nodal: break;
  }
  return X3Kind::Nodal;
}

ScalarField ScalarField::zeros(const Grid& g, Block b) {
  ScalarField f;
  f.grid = g;
  f.block = b;
  f.samples.assign(g.size(b), cplx{});
  return f;
}

SpectralScalar SpectralScalar::zeros(const Grid& g, BasisDescriptor b) {
  SpectralScalar s;
  s.grid = g;
  s.basis = b;
  s.coeffs.assign(g.size(b.block), cplx{});
  return s;
}

namespace {

double mode_norm(const X3Segment& s, int k) {
  if (!s.sine && k == 0) return std::sqrt(1.0 / s.L);
  return std::sqrt(2.0 / s.L);
}

// trig(pi k (m + 1/2) / N) evaluated from the exact rational phase
double midpoint_trig(bool sine, int k, int m, int N) {
  const double phase = kPi * static_cast<double>(k) * (2.0 * m + 1.0) / (2.0 * N);
  return sine ? std::sin(phase) : std::cos(phase);
}

std::vector<double> synthesis_matrix(const X3Segment& s) {
  std::vector<double> S(static_cast<std::size_t>(s.N) * s.N);
  for (int m = 0; m < s.N; ++m)
    for (int i = 0; i < s.N; ++i) {
      const int k = s.mode_number(i);
      S[static_cast<std::size_t>(m) * s.N + i] = mode_norm(s, k) * midpoint_trig(s.sine, k, m, s.N);
    }
  return S;
}

std::vector<double> analysis_matrix(const X3Segment& s) {
  const std::vector<double> S = synthesis_matrix(s);
  std::vector<double> A(S.size());
  const double h = s.L / s.N;
  for (int i = 0; i < s.N; ++i) {
    const double w = (s.sine && i == s.N - 1) ? 0.5 : 1.0;
    for (int m = 0; m < s.N; ++m)
      A[static_cast<std::size_t>(i) * s.N + m] = w * h * S[static_cast<std::size_t>(m) * s.N + i];
  }
  return A;
}

// out[., ., off + r] = sum_c M[r][c] in[., ., off + c] for every horizontal column
void apply_x3(const std::vector<cplx>& in, std::vector<cplx>& out, std::size_t columns, int n3, const X3Segment& s,
              const std::vector<double>& M) {
  for (std::size_t col = 0; col < columns; ++col) {
    const cplx* src = in.data() + col * n3 + s.offset;
    cplx* dst = out.data() + col * n3 + s.offset;
    for (int r = 0; r < s.N; ++r) {
      cplx acc{};
      const double* row = M.data() + static_cast<std::size_t>(r) * s.N;
      for (int c = 0; c < s.N; ++c) acc += row[c] * src[c];
      dst[r] = acc;
    }
  }
}

std::vector<cplx> dft_matrix(int n, double l, bool forward) {
  std::vector<cplx> tw(n);
  for (int r = 0; r < n; ++r) tw[r] = std::polar(1.0, (forward ? -2.0 : 2.0) * kPi * r / n);
  const double scale = forward ? std::sqrt(l) / n : 1.0 / std::sqrt(l);
  std::vector<cplx> M(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) M[static_cast<std::size_t>(k) * n + j] = scale * tw[(static_cast<long>(k) * j) % n];
  return M;
}

void apply_axis1(std::vector<cplx>& data, int n1, std::size_t inner, const std::vector<cplx>& M) {
  std::vector<cplx> out(data.size(), cplx{});
  for (int k = 0; k < n1; ++k) {
    cplx* dst = out.data() + k * inner;
    for (int j = 0; j < n1; ++j) {
      const cplx w = M[static_cast<std::size_t>(k) * n1 + j];
      const cplx* src = data.data() + j * inner;
      for (std::size_t q = 0; q < inner; ++q) dst[q] += w * src[q];
    }
  }
  data.swap(out);
}

void apply_axis2(std::vector<cplx>& data, int n1, int n2, int n3, const std::vector<cplx>& M) {
  std::vector<cplx> out(data.size(), cplx{});
  for (int a = 0; a < n1; ++a)
    for (int k = 0; k < n2; ++k) {
      cplx* dst = out.data() + (static_cast<std::size_t>(a) * n2 + k) * n3;
      for (int j = 0; j < n2; ++j) {
        const cplx w = M[static_cast<std::size_t>(k) * n2 + j];
        const cplx* src = data.data() + (static_cast<std::size_t>(a) * n2 + j) * n3;
        for (int q = 0; q < n3; ++q) dst[q] += w * src[q];
      }
    }
  data.swap(out);
}

void horizontal(std::vector<cplx>& data, const Grid& g, int n3, bool forward) {
  apply_axis1(data, g.n1, static_cast<std::size_t>(g.n2) * n3, dft_matrix(g.n1, g.domain.l1, forward));
  apply_axis2(data, g.n1, g.n2, n3, dft_matrix(g.n2, g.domain.l2, forward));
}

void check_compatible(const Grid& g, Block field_block, BasisDescriptor b) {
  if (b.x3 == X3Kind::Nodal || is_half(b.x3)) {
    if (field_block != b.block)
      throw BasisError(BasisErrc::BlockMismatch, fmt::format("basis {} block differs from field block", to_string(b.x3)));
  } else if (field_block != Block::Both) {
    throw BasisError(BasisErrc::BlockMismatch, fmt::format("{} needs samples on both blocks", to_string(b.x3)));
  }
  (void)g;
}

}  // namespace

double X3Segment::value(int i, double x) const {
  const int k = mode_number(i);
  const double arg = kPi * k * (x - a) / L;
  return mode_norm(*this, k) * (sine ? std::sin(arg) : std::cos(arg));
}

double X3Segment::derivative(int i, double x) const {
  const int k = mode_number(i);
  const double arg = kPi * k * (x - a) / L;
  return mode_norm(*this, k) * (kPi * k / L) * (sine ? std::cos(arg) : -std::sin(arg));
}

double X3Segment::start_value(int i) const { return sine ? 0.0 : mode_norm(*this, mode_number(i)); }

double X3Segment::end_value(int i) const {
  if (sine) return 0.0;
  const int k = mode_number(i);
  return (k % 2 == 0 ? 1.0 : -1.0) * mode_norm(*this, k);
}

double X3Segment::deriv_factor(int i) const {
  const int k = mode_number(i);
  return sine ? kPi * k / L : -kPi * k / L;
}

std::vector<X3Segment> x3_segments(const Grid& g, BasisDescriptor b) {
  const DomainSpec& d = g.domain;
  const bool sine = is_sine(b.x3);
  auto lower = [&](int off) { return X3Segment{-d.l3_minus, d.l3_minus, g.n3_minus, off, sine, Block::Lower}; };
  auto upper = [&](int off) { return X3Segment{0.0, d.l3_plus, g.n3_plus, off, sine, Block::Upper}; };
  if (b.x3 == X3Kind::SineFull || b.x3 == X3Kind::CosineFull) {
    if (b.block != Block::Both)
      throw BasisError(BasisErrc::BlockMismatch, fmt::format("{} needs both blocks", to_string(b.x3)));
    return {X3Segment{-d.l3_minus, d.l3(), g.n3(), 0, sine, Block::Both}};
  }
  switch (b.block) {
    case Block::Lower: return {lower(0)};
    case Block::Upper: return {upper(0)};
    case Block::Both: return {lower(0), upper(g.n3_minus)};
  }
  return {};
}

double angular_wavenumber(int k, int n, double l) { return 2.0 * kPi * signed_wavenumber(k, n) / l; }

cplx derivative_multiplier(int k, int n, double l) {
  if (is_nyquist(k, n)) return {};
  return {0.0, angular_wavenumber(k, n, l)};
}

SpectralScalar analyze_x3(const SpectralScalar& nodal, X3Kind kind) {
  if (nodal.basis.x3 != X3Kind::Nodal)
    throw BasisError(BasisErrc::ShapeMismatch, "analyze_x3 expects nodal x3 data");
  BasisDescriptor b{kind, nodal.basis.block};
  check_compatible(nodal.grid, nodal.basis.block, b);
  SpectralScalar out = SpectralScalar::zeros(nodal.grid, b);
  if (kind == X3Kind::Nodal) {
    out.coeffs = nodal.coeffs;
    return out;
  }
  const std::size_t columns = static_cast<std::size_t>(nodal.grid.n1) * nodal.grid.n2;
  for (const X3Segment& s : x3_segments(nodal.grid, b))
    apply_x3(nodal.coeffs, out.coeffs, columns, nodal.n3(), s, analysis_matrix(s));
  return out;
}

SpectralScalar synthesize_x3(const SpectralScalar& spec) {
  SpectralScalar out = SpectralScalar::zeros(spec.grid, {X3Kind::Nodal, spec.basis.block});
  if (spec.basis.x3 == X3Kind::Nodal) {
    out.coeffs = spec.coeffs;
    return out;
  }
  const std::size_t columns = static_cast<std::size_t>(spec.grid.n1) * spec.grid.n2;
  for (const X3Segment& s : x3_segments(spec.grid, spec.basis))
    apply_x3(spec.coeffs, out.coeffs, columns, spec.n3(), s, synthesis_matrix(s));
  return out;
}

SpectralScalar analyze(const ScalarField& field, BasisDescriptor basis) {
  if (field.samples.size() != field.grid.size(field.block))
    throw BasisError(BasisErrc::ShapeMismatch,
                     fmt::format("sample count {} does not match grid block size {}", field.samples.size(),
                                 field.grid.size(field.block)));
  check_compatible(field.grid, field.block, basis);
  SpectralScalar nodal;
  nodal.grid = field.grid;
  nodal.basis = {X3Kind::Nodal, field.block};
  nodal.coeffs = field.samples;
  horizontal(nodal.coeffs, field.grid, field.n3(), true);
  return analyze_x3(nodal, basis.x3);
}

ScalarField synthesize(const SpectralScalar& spec) {
  if (spec.coeffs.size() != spec.grid.size(spec.basis.block))
    throw BasisError(BasisErrc::ShapeMismatch, "coefficient count does not match basis");
  SpectralScalar nodal = synthesize_x3(spec);
  horizontal(nodal.coeffs, spec.grid, spec.n3(), false);
  ScalarField f;
  f.grid = spec.grid;
  f.block = spec.basis.block;
  f.samples = std::move(nodal.coeffs);
  return f;
}

SpectralScalar derivative(const SpectralScalar& spec, int axis) {
  const Grid& g = spec.grid;
  const int n3 = spec.n3();
  if (axis == 1 || axis == 2) {
    SpectralScalar out = spec;
    for (int k1 = 0; k1 < g.n1; ++k1)
      for (int k2 = 0; k2 < g.n2; ++k2) {
        const cplx f = axis == 1 ? derivative_multiplier(k1, g.n1, g.domain.l1)
                                 : derivative_multiplier(k2, g.n2, g.domain.l2);
        for (int k = 0; k < n3; ++k) out.at(k1, k2, k) *= f;
      }
    return out;
  }
  if (axis != 3) throw BasisError(BasisErrc::ShapeMismatch, fmt::format("axis {} out of range", axis));
  if (spec.basis.x3 == X3Kind::Nodal)
    throw BasisError(BasisErrc::NodalAxisDerivative, "x3 derivative requested on a nodal x3 representation");
  SpectralScalar out = SpectralScalar::zeros(g, {parity_flip(spec.basis.x3), spec.basis.block});
  for (const X3Segment& s : x3_segments(g, spec.basis)) {
    for (int k1 = 0; k1 < g.n1; ++k1)
      for (int k2 = 0; k2 < g.n2; ++k2)
        for (int i = 0; i < s.N; ++i) {
          const int target = s.sine ? i + 1 : i - 1;
          if (target < 0 || target >= s.N) continue;
          out.at(k1, k2, s.offset + target) = s.deriv_factor(i) * spec.at(k1, k2, s.offset + i);
        }
  }
  return out;
}

Spectrum2D trace_x3(const SpectralScalar& spec, TraceLocation where) {
  if (spec.basis.x3 == X3Kind::Nodal)
    throw BasisError(BasisErrc::NodalAxisTrace, "x3 trace requested on a nodal x3 representation");
  const Grid& g = spec.grid;
  const std::vector<X3Segment> segs = x3_segments(g, spec.basis);
  const X3Segment* seg = nullptr;
  enum { Start, End, Interface } at = Start;
  if (!is_half(spec.basis.x3)) {
    seg = &segs.front();
    at = where == TraceLocation::Top ? End : where == TraceLocation::Bottom ? Start : Interface;
  } else {
    const bool want_upper = where == TraceLocation::GammaPlus || where == TraceLocation::Top;
    for (const X3Segment& s : segs)
      if ((s.block == Block::Upper) == want_upper) seg = &s;
    if (!seg) throw BasisError(BasisErrc::BlockMismatch, "trace location lies outside the represented block");
    at = (where == TraceLocation::GammaPlus || where == TraceLocation::Bottom) ? Start : End;
  }
  std::vector<double> vals(seg->N);
  for (int i = 0; i < seg->N; ++i)
    vals[i] = at == Start ? seg->start_value(i) : at == End ? seg->end_value(i) : seg->value(i, 0.0);

  Spectrum2D out{g.n1, g.n2, std::vector<cplx>(static_cast<std::size_t>(g.n1) * g.n2)};
  for (int k1 = 0; k1 < g.n1; ++k1)
    for (int k2 = 0; k2 < g.n2; ++k2) {
      cplx acc{};
      for (int i = 0; i < seg->N; ++i) acc += vals[i] * spec.at(k1, k2, seg->offset + i);
      out.at(k1, k2) = acc;
    }
  return out;
}

double l2_norm_block(const ScalarField& f, Block b) {
  const Grid& g = f.grid;
  int m_lo = 0, m_hi = f.n3();
  if (b != Block::Both && f.block == Block::Both) {
    m_lo = g.m0_of(b);
    m_hi = m_lo + g.n3_of(b);
  } else if (b != Block::Both && f.block != b) {
    return 0.0;
  }
  double acc = 0.0;
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int j2 = 0; j2 < g.n2; ++j2)
      for (int m = m_lo; m < m_hi; ++m) acc += std::norm(f.at(j1, j2, m));
  return std::sqrt(acc * g.dx1() * g.dx2() * g.h);
}

double l2_norm(const ScalarField& f) { return l2_norm_block(f, f.block); }

cplx inner(const ScalarField& u, const ScalarField& v) {
  if (u.samples.size() != v.samples.size()) throw BasisError(BasisErrc::ShapeMismatch, "inner: shape mismatch");
  cplx acc{};
  for (std::size_t q = 0; q < u.samples.size(); ++q) acc += u.samples[q] * std::conj(v.samples[q]);
  return acc * (u.grid.dx1() * u.grid.dx2() * u.grid.h);
}

double coefficient_norm(const SpectralScalar& s) {
  double acc = 0.0;
  if (s.basis.x3 == X3Kind::Nodal) {
    for (const cplx& c : s.coeffs) acc += std::norm(c);
    return std::sqrt(acc * s.grid.h);
  }
  const std::vector<X3Segment> segs = x3_segments(s.grid, s.basis);
  for (int k1 = 0; k1 < s.grid.n1; ++k1)
    for (int k2 = 0; k2 < s.grid.n2; ++k2)
      for (const X3Segment& seg : segs)
        for (int i = 0; i < seg.N; ++i) {
          const double w = (seg.sine && i == seg.N - 1) ? 2.0 : 1.0;
          acc += w * std::norm(s.at(k1, k2, seg.offset + i));
        }
  return std::sqrt(acc);
}

ScalarField restrict_block(const ScalarField& f, Block b) {
  if (f.block == b) return f;
  if (f.block != Block::Both) throw BasisError(BasisErrc::BlockMismatch, "restrict_block: block not present");
  ScalarField out = ScalarField::zeros(f.grid, b);
  const int m0 = f.grid.m0_of(b), nb = f.grid.n3_of(b);
  for (int j1 = 0; j1 < f.grid.n1; ++j1)
    for (int j2 = 0; j2 < f.grid.n2; ++j2)
      for (int m = 0; m < nb; ++m) out.at(j1, j2, m) = f.at(j1, j2, m0 + m);
  return out;
}

ScalarField join_blocks(const ScalarField& lower, const ScalarField& upper) {
  if (lower.block != Block::Lower || upper.block != Block::Upper || !same_grid(lower.grid, upper.grid))
    throw BasisError(BasisErrc::BlockMismatch, "join_blocks needs a lower and an upper field on one grid");
  ScalarField out = ScalarField::zeros(lower.grid, Block::Both);
  const Grid& g = lower.grid;
  for (int j1 = 0; j1 < g.n1; ++j1)
    for (int j2 = 0; j2 < g.n2; ++j2) {
      for (int m = 0; m < g.n3_minus; ++m) out.at(j1, j2, m) = lower.at(j1, j2, m);
      for (int m = 0; m < g.n3_plus; ++m) out.at(j1, j2, g.n3_minus + m) = upper.at(j1, j2, m);
    }
  return out;
}

}  // namespace polmax
