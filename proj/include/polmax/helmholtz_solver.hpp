#pragma once

#include <stdexcept>

#include "polmax/sources.hpp"
#include "polmax/spectrum_modes.hpp"

namespace polmax {

class ResonantFrequency : public std::runtime_error {
public:
  ResonantFrequency(const SpectrumEntry& e, double rel, const std::string& what)
      : std::runtime_error(what), entry(e), rel_distance(rel) {}
  SpectrumEntry entry;
  double rel_distance;
};

class ResonantAxialFrequency : public ResonantFrequency {
public:
  using ResonantFrequency::ResonantFrequency;
};

struct AxialSolution {
  SpectralScalar E1;  // SineHalf
  SpectralScalar H1;  // CosineFull
};

// horizontal Fourier x nodal x3
struct TransverseSolution {
  SpectralScalar E2, E3, H2, H3;
};

struct SolveReport {
  ResonanceDiagnostic resonance;
  std::size_t e1_modes = 0;
  std::size_t h1_modes = 0;
  std::size_t transverse_columns = 0;
  double wall_time_s = 0.0;
};

struct SolveResult {
  FieldPair fields;
  SolveReport report;
};

inline constexpr double kResonanceTol = 1e-8;

AxialSolution solve_axial(const WeakRhs& rhs, const PhysicalParams& p, double tol = kResonanceTol,
                          SolveReport* report = nullptr);
TransverseSolution solve_transverse(const AxialSolution& axial, const WeakRhs& rhs, const PhysicalParams& p,
                                    double tol = kResonanceTol, SolveReport* report = nullptr);

// full pipeline for unprojected sources
SolveResult solve(const SourcePair& src, const PhysicalParams& p, double tol = kResonanceTol);

}  // namespace polmax
