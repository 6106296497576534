#pragma once

#include <array>
#include <string>
#include <vector>

#include "polmax/sources.hpp"

namespace polmax {

inline constexpr int kFdOrder = 6;

// Fornberg weights for the first derivative at x0 from the given nodes
std::vector<double> fd_weights(const std::vector<double>& nodes, double x0);

// one-sided x3 derivative per block, never differencing across Gamma
ScalarField fd_d3(const ScalarField& f);
// spectral x3 derivative for tagged layouts, fd_d3 for Nodal
ScalarField d3_field(const ScalarField& f, X3Kind layout);
ScalarField d_horizontal(const ScalarField& f, int axis);

struct TraceValue {
  std::string name;
  double value = 0.0;
  bool spectral = false;  // read off the series (exact) or extrapolated from midpoints
  double scale = 0.0;     // magnitude the extrapolated value is compared against
  double relative() const { return scale > 0.0 ? value / scale : value; }
};

struct ResidualReport {
  std::array<double, 2> faraday{};  // lower, upper
  std::array<double, 2> ampere{};
  std::array<double, 2> faraday_scale{};
  std::array<double, 2> ampere_scale{};
  int fd_order = kFdOrder;
  std::array<double, 6> helmholtz_weak{};
  std::vector<TraceValue> traces;
  double div_E_pairing = 0.0;
  double div_H_pairing = 0.0;

  double faraday_norm() const;
  double ampere_norm() const;
  double faraday_relative() const;  // both blocks: norm / scale
  double ampere_relative() const;
  const TraceValue& trace(const std::string& name) const;
};

struct Tolerances {
  double resonance = 1e-8;
  double weak = 1e-9;
  double trace = 1e-10;
  double strong = 1e-4;  // relative; FD6 floor depends on x3 resolution
  double interp = 1e-2;
};

// strong part: per-block L2 norms of curl E - i w mu H - f_h and curl H + i w eps E - f_e
void maxwell_residual(const FieldPair& fields, const SourcePair& src, const PhysicalParams& p, ResidualReport& r);
std::array<double, 6> weak_helmholtz_residual(const FieldPair& fields, const SourcePair& src, const PhysicalParams& p);
std::vector<TraceValue> trace_checks(const FieldPair& fields, const SourcePair& src, const PhysicalParams& p);

ResidualReport verify(const FieldPair& fields, const SourcePair& src, const PhysicalParams& p);

// names of the checks above tolerance; divergence pairings are not gated
std::vector<std::string> failing_checks(const ResidualReport& r, const Tolerances& tol);

}  // namespace polmax
