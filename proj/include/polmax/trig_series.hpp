#pragma once

#include <array>
#include <vector>

#include "polmax/fields.hpp"

namespace polmax {

// Closed-form trigonometric fields:
//   sum coef * exp(2 pi i (k1 x1 / l1 + k2 x2 / l2)) * trig(pi k3 (x3 - a) / L)
// with (a, L) and support fixed by the family.
enum class Family { Full, Upper, Lower };

struct TrigTerm {
  cplx coef;
  int k1 = 0;
  int k2 = 0;
  bool sine = false;
  int k3 = 0;
  Family fam = Family::Full;
};

struct TrigField {
  std::vector<TrigTerm> terms;
};

struct TrigVector {
  std::array<TrigField, 3> c;
};

TrigField operator+(const TrigField& a, const TrigField& b);
TrigField operator*(cplx s, const TrigField& a);
TrigVector operator+(const TrigVector& a, const TrigVector& b);
TrigVector operator*(cplx s, const TrigVector& a);

// merge equal modes and drop exact zeros
TrigField simplify(const TrigField& f);
bool is_zero(const TrigField& f);
bool is_zero(const TrigVector& v);

TrigField d1(const TrigField& f, const DomainSpec& d);
TrigField d2(const TrigField& f, const DomainSpec& d);
TrigField d3(const TrigField& f, const DomainSpec& d);
TrigVector curl(const TrigVector& v, const DomainSpec& d);

// cos(2 pi k1 x1 / l1) cos(2 pi k2 x2 / l2) times one x3 mode
TrigField cos_cos(int k1, int k2, bool sine, int k3, Family fam, cplx coef = 1.0);

// value of the x3 factor of a term at a trace location
double x3_trace_value(const TrigTerm& t, const DomainSpec& d, TraceLocation where);
// max over horizontal modes of |sum of terms at the location|
double max_trace(const TrigField& f, const DomainSpec& d, TraceLocation where);
double max_jump(const TrigField& f, const DomainSpec& d);

cplx evaluate(const TrigField& f, const DomainSpec& d, double x1, double x2, double x3);
ScalarField sample(const TrigField& f, const Grid& g);
VectorField sample(const TrigVector& v, const Grid& g);

// parity basis that represents f exactly on the grid, or fallback
X3Kind natural_layout(const TrigField& f, const Grid& g, X3Kind fallback);

// FieldPair from closed-form E and H, layouts chosen per component
FieldPair sample_pair(const TrigVector& E, const TrigVector& H, const Grid& g);

}  // namespace polmax
