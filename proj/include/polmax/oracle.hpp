#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polmax/trig_series.hpp"

namespace polmax {

class RecipeViolatesConstraints : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// closed-form (E, H) with the sources that make it a Maxwell solution
struct ManufacturedCase {
  std::string recipe;
  DomainSpec domain;
  PhysicalParams params;
  TrigVector E, H;
  TrigVector f_h, f_e;
};

struct SampledCase {
  FieldPair fields;
  SourcePair sources;
};

const std::vector<std::string>& recipe_names();

// throws RecipeViolatesConstraints naming the first broken condition
void check_constraints(const TrigVector& E, const TrigVector& H, const DomainSpec& d);

// f_h := curl E - i w mu H, f_e := curl H + i w eps E, block by block
ManufacturedCase manufacture_from(const std::string& name, const TrigVector& E, const TrigVector& H,
                                  const DomainSpec& d, const PhysicalParams& p);
ManufacturedCase manufacture(const std::string& recipe, const DomainSpec& d, const PhysicalParams& p);

SampledCase sample(const ManufacturedCase& c, const Grid& g);

enum class AxialBc { Dirichlet, Neumann, Periodic };

AxialBc axial_bc_from_string(const std::string& s);

// eigenvalues of the second-order FD Laplacian (-u'') on n points, ascending
std::vector<double> dense_axial_eigenvalues(int n, double L, AxialBc bc);

}  // namespace polmax
