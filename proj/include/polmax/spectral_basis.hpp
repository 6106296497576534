#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polmax/geometry.hpp"

namespace polmax {

// x3 representation. Half kinds use one basis per block:
//   upper block: sin/cos(pi k x3 / l3+), lower block: sin/cos(pi k (x3 + l3-) / l3-)
// full kinds use sin/cos(pi k (x3 + l3-) / l3) on the whole interval.
// Sines run over k = 1..N, cosines over k = 0..N-1; every mode has unit L2 norm.
enum class X3Kind { Nodal, SineHalf, CosineHalf, SineFull, CosineFull };

const char* to_string(X3Kind k);
X3Kind x3kind_from_string(const std::string& s);
bool is_sine(X3Kind k);
bool is_half(X3Kind k);
X3Kind parity_flip(X3Kind k);

struct BasisDescriptor {
  X3Kind x3 = X3Kind::Nodal;
  Block block = Block::Both;
};

enum class BasisErrc { ShapeMismatch, BlockMismatch, NodalAxisDerivative, NodalAxisTrace };

class BasisError : public std::runtime_error {
public:
  BasisError(BasisErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  BasisErrc code() const { return code_; }

private:
  BasisErrc code_;
};

// Nodal samples indexed (j1, j2, m3), m3 fastest, lower block first.
struct ScalarField {
  Grid grid;
  Block block = Block::Both;
  std::vector<cplx> samples;

  static ScalarField zeros(const Grid& g, Block b = Block::Both);
  int n3() const { return grid.n3_of(block); }
  std::size_t index(int j1, int j2, int m) const {
    return (static_cast<std::size_t>(j1) * grid.n2 + j2) * n3() + m;
  }
  cplx& at(int j1, int j2, int m) { return samples[index(j1, j2, m)]; }
  const cplx& at(int j1, int j2, int m) const { return samples[index(j1, j2, m)]; }
};

// Coefficients indexed (k1, k2, k3) with k1, k2 in DFT order. For Nodal x3 the
// third index is the x3 layer.
struct SpectralScalar {
  Grid grid;
  BasisDescriptor basis;
  std::vector<cplx> coeffs;

  static SpectralScalar zeros(const Grid& g, BasisDescriptor b);
  int n3() const { return grid.n3_of(basis.block); }
  std::size_t index(int k1, int k2, int k3) const {
    return (static_cast<std::size_t>(k1) * grid.n2 + k2) * n3() + k3;
  }
  cplx& at(int k1, int k2, int k3) { return coeffs[index(k1, k2, k3)]; }
  const cplx& at(int k1, int k2, int k3) const { return coeffs[index(k1, k2, k3)]; }
};

struct Spectrum2D {
  int n1 = 0;
  int n2 = 0;
  std::vector<cplx> coeffs;
  cplx& at(int k1, int k2) { return coeffs[static_cast<std::size_t>(k1) * n2 + k2]; }
  const cplx& at(int k1, int k2) const { return coeffs[static_cast<std::size_t>(k1) * n2 + k2]; }
};

enum class TraceLocation { GammaPlus, GammaMinus, Top, Bottom };

// One contiguous interval carrying its own x3 basis.
struct X3Segment {
  double a = 0.0;  // interval start
  double L = 1.0;  // interval length
  int N = 0;       // nodes == modes
  int offset = 0;  // first layer / first mode inside the owning array
  bool sine = false;
  Block block = Block::Both;

  int mode_number(int i) const { return sine ? i + 1 : i; }
  double value(int i, double x) const;
  double derivative(int i, double x) const;
  double start_value(int i) const;
  double end_value(int i) const;
  double deriv_factor(int i) const;  // d/dx3 maps mode i to mode i of the flipped parity
};

std::vector<X3Segment> x3_segments(const Grid& g, BasisDescriptor b);

SpectralScalar analyze(const ScalarField& field, BasisDescriptor basis);
ScalarField synthesize(const SpectralScalar& spec);
SpectralScalar derivative(const SpectralScalar& spec, int axis);
Spectrum2D trace_x3(const SpectralScalar& spec, TraceLocation where);

// x3-only transforms on data already in horizontal Fourier space
SpectralScalar analyze_x3(const SpectralScalar& nodal, X3Kind kind);
SpectralScalar synthesize_x3(const SpectralScalar& spec);

// 2 pi k~ / l (signed), and the derivative multiplier i 2 pi k~ / l with Nyquist zeroed
double angular_wavenumber(int k, int n, double l);
cplx derivative_multiplier(int k, int n, double l);

// discrete L2 norm with midpoint quadrature weights
double l2_norm(const ScalarField& f);
double l2_norm_block(const ScalarField& f, Block b);
cplx inner(const ScalarField& u, const ScalarField& v);
// weighted coefficient norm implied by the basis normalisation
double coefficient_norm(const SpectralScalar& s);

ScalarField restrict_block(const ScalarField& f, Block b);
ScalarField join_blocks(const ScalarField& lower, const ScalarField& upper);

}  // namespace polmax
