#include "polmax/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace polmax {

namespace {
constexpr const char* kNames[6] = {"E1", "E2", "E3", "H1", "H2", "H3"};

void check_same(const ScalarField& a, const ScalarField& b) {
  if (a.samples.size() != b.samples.size() || a.block != b.block)
    throw BasisError(BasisErrc::ShapeMismatch, "field arithmetic on mismatched shapes");
}
}  // namespace

const char* comp_name(int c) { return kNames[c]; }

int comp_from_name(const std::string& name) {
  for (int c = 0; c < 6; ++c)
    if (name == kNames[c]) return c;
  throw std::invalid_argument("unknown field component '" + name + "'");
}

FieldPair FieldPair::zeros(const Grid& g) {
  FieldPair p;
  for (auto& f : p.c) f = ScalarField::zeros(g);
  return p;
}

VectorField VectorField::zeros(const Grid& g) {
  VectorField v;
  for (auto& f : v.c) f = ScalarField::zeros(g);
  return v;
}

SourcePair SourcePair::zeros(const Grid& g) { return {VectorField::zeros(g), VectorField::zeros(g)}; }

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  check_same(a, b);
  ScalarField out = a;
  for (std::size_t q = 0; q < out.samples.size(); ++q) out.samples[q] += b.samples[q];
  return out;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  check_same(a, b);
  ScalarField out = a;
  for (std::size_t q = 0; q < out.samples.size(); ++q) out.samples[q] -= b.samples[q];
  return out;
}

ScalarField operator*(cplx s, const ScalarField& a) {
  ScalarField out = a;
  for (auto& v : out.samples) v *= s;
  return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = a.c[i] - b.c[i];
  return out;
}

VectorField operator*(cplx s, const VectorField& a) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = s * a.c[i];
  return out;
}

double l2_norm(const VectorField& v) {
  double acc = 0.0;
  for (const auto& f : v.c) acc += std::pow(l2_norm(f), 2);
  return std::sqrt(acc);
}

cplx inner(const VectorField& u, const VectorField& v) {
  cplx acc{};
  for (int i = 0; i < 3; ++i) acc += inner(u.c[i], v.c[i]);
  return acc;
}

double max_abs(const ScalarField& f) {
  double m = 0.0;
  for (const cplx& v : f.samples) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace polmax
