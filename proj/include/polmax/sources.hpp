#pragma once

#include "polmax/fields.hpp"

namespace polmax {

// X0: gradients of potentials vanishing on top/bottom and, when k1 != 0, on Gamma.
// Y0: gradients of potentials that may jump across Gamma when k1 = 0.
enum class Potential { X0, Y0 };

// x3 basis of the potential for horizontal DFT index k1
X3Kind potential_kind(Potential pot, int k1);

struct Decomposition {
  VectorField tilde;
  VectorField grad;
};

Decomposition project(const VectorField& f, Potential pot);
inline Decomposition project_e(const VectorField& f_e) { return project(f_e, Potential::X0); }
inline Decomposition project_h(const VectorField& f_h) { return project(f_h, Potential::Y0); }

// <f, grad b> for every discrete basis potential b, in a fixed mode order
std::vector<cplx> gradient_pairings(const VectorField& f, Potential pot);
double max_gradient_pairing(const VectorField& f, Potential pot);

// F_E1 on SineHalf, F_H1 on CosineFull; the transverse forms are horizontal
// Fourier x nodal x3.
struct WeakRhs {
  SpectralScalar F_E1;
  SpectralScalar F_H1;
  SpectralScalar F_E2;
  SpectralScalar F_H2;
  SpectralScalar F_E3;
  SpectralScalar F_H3;
};

WeakRhs assemble_weak_rhs(const SourcePair& src, const PhysicalParams& p);

// horizontal DFT with nodal x3 (the transverse carrier)
SpectralScalar fourier_nodal(const ScalarField& f);
ScalarField from_fourier_nodal(const SpectralScalar& s);

}  // namespace polmax
