#include "polmax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace polmax {

namespace {

TrigField mode(cplx c, int k1, int k2, bool sine, int k3, Family fam) {
  TrigField f;
  f.terms.push_back({c, k1, k2, sine, k3, fam});
  return f;
}

TrigField neg(const TrigField& f) { return (-1.0) * f; }

double max_coef(const TrigVector& v) {
  double m = 0.0;
  for (const TrigField& f : v.c)
    for (const TrigTerm& t : f.terms) m = std::max(m, std::abs(t.coef));
  return m;
}

struct Shape {
  TrigVector E, H;
};

// bulk construction at an arbitrary frequency: E = (0, d3 w, -d2 w), H = curl E / (i w mu)
Shape bulk_shape(const TrigField& w, const DomainSpec& d, const PhysicalParams& p) {
  Shape s;
  s.E = {{TrigField{}, d3(w, d), neg(d2(w, d))}};
  s.H = (1.0 / cplx(0.0, p.omega * p.mu)) * curl(s.E, d);
  return s;
}

// half construction: H = (0, d3 w, -d2 w), E = curl H / (-i w eps)
Shape half_shape(const TrigField& w, const DomainSpec& d, const PhysicalParams& p) {
  Shape s;
  s.H = {{TrigField{}, d3(w, d), neg(d2(w, d))}};
  s.E = (1.0 / cplx(0.0, -p.omega * p.eps)) * curl(s.H, d);
  return s;
}

Shape bulk2(const DomainSpec& d, const PhysicalParams& p) {
  return bulk_shape(cos_cos(1, 0, false, 2, Family::Full), d, p);
}

Shape half_upper1(const DomainSpec& d, const PhysicalParams& p) {
  return half_shape(cos_cos(1, 0, true, 2, Family::Upper), d, p);
}

Shape half_lower1(const DomainSpec& d, const PhysicalParams& p) {
  return half_shape(cos_cos(0, 1, true, 1, Family::Lower), d, p);
}

// E = 0 and an H2 with different cosine profiles on the two blocks
Shape jumpy1(const DomainSpec&, const PhysicalParams&) {
  Shape s;
  s.H.c[1] = mode(1.0, 1, 0, false, 1, Family::Upper) + mode(0.5, 1, 0, false, 2, Family::Lower);
  return s;
}

// E = (i w eps)^-1 grad Phi, H = -(i w mu)^-1 grad Psi with admissible potentials
Shape gradient1(const DomainSpec& d, const PhysicalParams& p) {
  const TrigField phi = mode(0.7, 1, 0, true, 2, Family::Upper) + mode(cplx(0.2, -0.4), 0, 1, true, 1, Family::Full);
  const TrigField psi = mode(cplx(0.0, 0.6), 0, 1, false, 1, Family::Lower) + mode(0.5, -1, 0, false, 2, Family::Full);
  auto grad = [&](const TrigField& u) { return TrigVector{{d1(u, d), d2(u, d), d3(u, d)}}; };
  Shape s;
  s.E = (1.0 / cplx(0.0, p.omega * p.eps)) * grad(phi);
  s.H = (-1.0 / cplx(0.0, p.omega * p.mu)) * grad(psi);
  return s;
}

Shape mixed1(const DomainSpec& d, const PhysicalParams& p) {
  const Shape parts[4] = {bulk2(d, p), half_lower1(d, p), jumpy1(d, p), gradient1(d, p)};
  const cplx w[4] = {0.5, 1.0, cplx(0.0, 1.0), 1.0};
  Shape s;
  for (int i = 0; i < 4; ++i) {
    s.E = s.E + w[i] * parts[i].E;
    s.H = s.H + w[i] * parts[i].H;
  }
  return s;
}

using Recipe = std::function<Shape(const DomainSpec&, const PhysicalParams&)>;

const std::map<std::string, Recipe>& recipes() {
  static const std::map<std::string, Recipe> r = {
      {"axisym-1", [](const DomainSpec& d, const PhysicalParams& p) { return bulk_shape(cos_cos(0, 0, false, 1, Family::Full), d, p); }},
      {"bulk-2", bulk2},
      {"bulk-3", [](const DomainSpec& d, const PhysicalParams& p) { return bulk_shape(cos_cos(1, 1, false, 5, Family::Full), d, p); }},
      {"half-upper-1", half_upper1},
      {"half-lower-1", half_lower1},
      {"jumpy-1", jumpy1},
      {"gradient-1", gradient1},
      {"mixed-1", mixed1},
      {"bad-e1-gamma",
       [](const DomainSpec&, const PhysicalParams&) {
         Shape s;
         s.E.c[0] = mode(1.0, 1, 0, true, 1, Family::Full);
         return s;
       }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : recipes()) v.push_back(k);
    return v;
  }();
  return names;
}

void check_constraints(const TrigVector& E, const TrigVector& H, const DomainSpec& d) {
  const double tol = 1e-12 * std::max({1.0, max_coef(E), max_coef(H)});
  auto require = [&](double v, const char* what) {
    if (v > tol) throw RecipeViolatesConstraints(fmt::format("RecipeViolatesConstraints: {} (magnitude {:.3e})", what, v));
  };
  require(max_trace(E.c[0], d, TraceLocation::GammaPlus), "E1 does not vanish on Gamma+");
  require(max_trace(E.c[0], d, TraceLocation::GammaMinus), "E1 does not vanish on Gamma-");
  require(max_trace(E.c[0], d, TraceLocation::Top), "E1 does not vanish on the top boundary");
  require(max_trace(E.c[0], d, TraceLocation::Bottom), "E1 does not vanish on the bottom boundary");
  require(max_trace(E.c[1], d, TraceLocation::Top), "E2 does not vanish on the top boundary");
  require(max_trace(E.c[1], d, TraceLocation::Bottom), "E2 does not vanish on the bottom boundary");
  require(max_jump(E.c[1], d), "E2 jumps across Gamma");
  require(max_jump(H.c[0], d), "H1 jumps across Gamma");
}

ManufacturedCase manufacture_from(const std::string& name, const TrigVector& E, const TrigVector& H,
                                  const DomainSpec& d, const PhysicalParams& p) {
  check_constraints(E, H, d);
  ManufacturedCase c;
  c.recipe = name;
  c.domain = d;
  c.params = p;
  c.E = E;
  c.H = H;
  c.f_h = curl(E, d) + cplx(0.0, -p.omega * p.mu) * H;
  c.f_e = curl(H, d) + cplx(0.0, p.omega * p.eps) * E;
  return c;
}

ManufacturedCase manufacture(const std::string& recipe, const DomainSpec& d, const PhysicalParams& p) {
  const auto it = recipes().find(recipe);
  if (it == recipes().end()) throw std::invalid_argument("unknown recipe '" + recipe + "'");
  const Shape s = it->second(d, p);
  return manufacture_from(recipe, s.E, s.H, d, p);
}

SampledCase sample(const ManufacturedCase& c, const Grid& g) {
  SampledCase s;
  s.fields = sample_pair(c.E, c.H, g);
  s.sources.f_h = sample(c.f_h, g);
  s.sources.f_e = sample(c.f_e, g);
  return s;
}

AxialBc axial_bc_from_string(const std::string& s) {
  if (s == "dirichlet") return AxialBc::Dirichlet;
  if (s == "neumann") return AxialBc::Neumann;
  if (s == "periodic") return AxialBc::Periodic;
  throw std::invalid_argument("unknown boundary condition '" + s + "'");
}

std::vector<double> dense_axial_eigenvalues(int n, double L, AxialBc bc) {
  if (n < 8) throw std::invalid_argument("dense_axial_eigenvalues needs n >= 8");
  const double h = bc == AxialBc::Dirichlet ? L / (n + 1) : L / n;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    A(i, i) = 2.0;
    if (i > 0) A(i, i - 1) = -1.0;
    if (i + 1 < n) A(i, i + 1) = -1.0;
  }
  if (bc == AxialBc::Neumann) {
    // cell-centred points, mirrored ghost values
    A(0, 0) = 1.0;
    A(n - 1, n - 1) = 1.0;
  } else if (bc == AxialBc::Periodic) {
    A(0, n - 1) = -1.0;
    A(n - 1, 0) = -1.0;
  }
  A /= h * h;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polmax
