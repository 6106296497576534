#pragma once

#include <array>
#include <string>

#include "polmax/spectral_basis.hpp"

namespace polmax {

enum Comp : int { E1 = 0, E2, E3, H1, H2, H3 };

const char* comp_name(int c);
int comp_from_name(const std::string& name);

// Six components of (E, H), nodal on both blocks, each tagged with the x3
// basis in which it is exactly representable (Nodal when no such basis is known).
struct FieldPair {
  std::array<ScalarField, 6> c;
  std::array<X3Kind, 6> layout{X3Kind::SineHalf, X3Kind::Nodal, X3Kind::Nodal,
                               X3Kind::CosineFull, X3Kind::Nodal, X3Kind::Nodal};

  static FieldPair zeros(const Grid& g);
  const Grid& grid() const { return c[0].grid; }
};

struct VectorField {
  std::array<ScalarField, 3> c;
  static VectorField zeros(const Grid& g);
  const Grid& grid() const { return c[0].grid; }
};

struct SourcePair {
  VectorField f_h;
  VectorField f_e;
  static SourcePair zeros(const Grid& g);
  const Grid& grid() const { return f_h.grid(); }
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(cplx s, const VectorField& a);
ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(cplx s, const ScalarField& a);

double l2_norm(const VectorField& v);
cplx inner(const VectorField& u, const VectorField& v);
double max_abs(const ScalarField& f);

}  // namespace polmax
