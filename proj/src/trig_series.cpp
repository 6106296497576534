#include "polmax/trig_series.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace polmax {

namespace {

struct FamilyGeom {
  double a;
  double L;
};

FamilyGeom geom(Family f, const DomainSpec& d) {
  switch (f) {
    case Family::Full: return {-d.l3_minus, d.l3()};
    case Family::Upper: return {0.0, d.l3_plus};
    case Family::Lower: return {-d.l3_minus, d.l3_minus};
  }
  return {0.0, 1.0};
}

bool supported(Family f, bool upper_side) {
  return f == Family::Full || (f == Family::Upper) == upper_side;
}

// trig(pi k (m + 1/2) / N) and trig(pi k) with exact endpoint values
double trig_phase(bool sine, int k, double num, double den) {
  const double arg = kPi * k * num / den;
  return sine ? std::sin(arg) : std::cos(arg);
}

double trig_multiple_of_pi(bool sine, int k) { return sine ? 0.0 : (k % 2 == 0 ? 1.0 : -1.0); }

}  // namespace

TrigField operator+(const TrigField& a, const TrigField& b) {
  TrigField out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return simplify(out);
}

TrigField operator*(cplx s, const TrigField& a) {
  TrigField out = a;
  for (auto& t : out.terms) t.coef *= s;
  return simplify(out);
}

TrigVector operator+(const TrigVector& a, const TrigVector& b) {
  TrigVector out;
  for (int i = 0; i < 3; ++i) out.c[i] = a.c[i] + b.c[i];
  return out;
}

TrigVector operator*(cplx s, const TrigVector& a) {
  TrigVector out;
  for (int i = 0; i < 3; ++i) out.c[i] = s * a.c[i];
  return out;
}

TrigField simplify(const TrigField& f) {
  std::map<std::tuple<int, int, bool, int, int>, cplx> acc;
  std::vector<std::tuple<int, int, bool, int, int>> order;
  for (const TrigTerm& t : f.terms) {
    if (t.sine && t.k3 == 0) continue;
    // cos and sin are even/odd in k3
    int k3 = t.k3;
    cplx c = t.coef;
    if (k3 < 0) {
      k3 = -k3;
      if (t.sine) c = -c;
    }
    auto key = std::make_tuple(t.k1, t.k2, t.sine, k3, static_cast<int>(t.fam));
    if (!acc.count(key)) order.push_back(key);
    acc[key] += c;
  }
  TrigField out;
  for (const auto& key : order) {
    const cplx c = acc[key];
    if (c == cplx{}) continue;
    out.terms.push_back({c, std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key),
                         static_cast<Family>(std::get<4>(key))});
  }
  return out;
}

bool is_zero(const TrigField& f) { return simplify(f).terms.empty(); }
bool is_zero(const TrigVector& v) { return is_zero(v.c[0]) && is_zero(v.c[1]) && is_zero(v.c[2]); }

TrigField d1(const TrigField& f, const DomainSpec& d) {
  TrigField out = f;
  for (auto& t : out.terms) t.coef *= cplx(0.0, 2.0 * kPi * t.k1 / d.l1);
  return simplify(out);
}

TrigField d2(const TrigField& f, const DomainSpec& d) {
  TrigField out = f;
  for (auto& t : out.terms) t.coef *= cplx(0.0, 2.0 * kPi * t.k2 / d.l2);
  return simplify(out);
}

TrigField d3(const TrigField& f, const DomainSpec& d) {
  TrigField out = f;
  for (auto& t : out.terms) {
    const double w = kPi * t.k3 / geom(t.fam, d).L;
    t.coef *= t.sine ? w : -w;
    t.sine = !t.sine;
  }
  return simplify(out);
}

TrigVector curl(const TrigVector& v, const DomainSpec& d) {
  TrigVector out;
  out.c[0] = d2(v.c[2], d) + (-1.0) * d3(v.c[1], d);
  out.c[1] = d3(v.c[0], d) + (-1.0) * d1(v.c[2], d);
  out.c[2] = d1(v.c[1], d) + (-1.0) * d2(v.c[0], d);
  return out;
}

TrigField cos_cos(int k1, int k2, bool sine, int k3, Family fam, cplx coef) {
  TrigField out;
  const std::vector<int> s1 = k1 == 0 ? std::vector<int>{0} : std::vector<int>{k1, -k1};
  const std::vector<int> s2 = k2 == 0 ? std::vector<int>{0} : std::vector<int>{k2, -k2};
  const double w = 1.0 / (s1.size() * s2.size());
  for (int a : s1)
    for (int b : s2) out.terms.push_back({coef * w, a, b, sine, k3, fam});
  return simplify(out);
}

double x3_trace_value(const TrigTerm& t, const DomainSpec& d, TraceLocation where) {
  switch (where) {
    case TraceLocation::GammaPlus:
      if (t.fam == Family::Upper) return trig_multiple_of_pi(t.sine, 0);
      if (t.fam == Family::Full) return trig_phase(t.sine, t.k3, d.l3_minus, d.l3());
      return 0.0;
    case TraceLocation::GammaMinus:
      if (t.fam == Family::Lower) return trig_multiple_of_pi(t.sine, t.k3);
      if (t.fam == Family::Full) return trig_phase(t.sine, t.k3, d.l3_minus, d.l3());
      return 0.0;
    case TraceLocation::Top:
      return t.fam == Family::Lower ? 0.0 : trig_multiple_of_pi(t.sine, t.k3);
    case TraceLocation::Bottom:
      return t.fam == Family::Upper ? 0.0 : trig_multiple_of_pi(t.sine, 0);
  }
  return 0.0;
}

namespace {
std::map<std::pair<int, int>, cplx> trace_by_mode(const TrigField& f, const DomainSpec& d, TraceLocation where) {
  std::map<std::pair<int, int>, cplx> acc;
  for (const TrigTerm& t : f.terms) acc[{t.k1, t.k2}] += t.coef * x3_trace_value(t, d, where);
  return acc;
}
}  // namespace

double max_trace(const TrigField& f, const DomainSpec& d, TraceLocation where) {
  double m = 0.0;
  for (const auto& [key, v] : trace_by_mode(f, d, where)) m = std::max(m, std::abs(v));
  return m;
}

double max_jump(const TrigField& f, const DomainSpec& d) {
  auto up = trace_by_mode(f, d, TraceLocation::GammaPlus);
  auto lo = trace_by_mode(f, d, TraceLocation::GammaMinus);
  for (const auto& [key, v] : lo) up[key] -= v;
  double m = 0.0;
  for (const auto& [key, v] : up) m = std::max(m, std::abs(v));
  return m;
}

cplx evaluate(const TrigField& f, const DomainSpec& d, double x1, double x2, double x3) {
  const bool upper = x3 > 0.0;
  cplx acc{};
  for (const TrigTerm& t : f.terms) {
    if (!supported(t.fam, upper)) continue;
    const FamilyGeom g = geom(t.fam, d);
    const double arg = kPi * t.k3 * (x3 - g.a) / g.L;
    const double z = t.sine ? std::sin(arg) : std::cos(arg);
    acc += t.coef * z * std::polar(1.0, 2.0 * kPi * (t.k1 * x1 / d.l1 + t.k2 * x2 / d.l2));
  }
  return acc;
}

ScalarField sample(const TrigField& f, const Grid& g) {
  ScalarField out = ScalarField::zeros(g);
  const int n3 = g.n3();
  std::vector<cplx> hor(static_cast<std::size_t>(g.n1) * g.n2);
  std::vector<double> vert(n3);
  for (const TrigTerm& t : f.terms) {
    for (int j1 = 0; j1 < g.n1; ++j1)
      for (int j2 = 0; j2 < g.n2; ++j2) {
        const long r1 = ((static_cast<long>(t.k1) * j1) % g.n1 + g.n1) % g.n1;
        const long r2 = ((static_cast<long>(t.k2) * j2) % g.n2 + g.n2) % g.n2;
        hor[static_cast<std::size_t>(j1) * g.n2 + j2] =
            std::polar(1.0, 2.0 * kPi * (static_cast<double>(r1) / g.n1 + static_cast<double>(r2) / g.n2));
      }
    for (int m = 0; m < n3; ++m) {
      const bool upper = m >= g.n3_minus;
      if (!supported(t.fam, upper)) {
        vert[m] = 0.0;
        continue;
      }
      // local offset from the family origin in units of h
      double num = m + 0.5;
      int den = n3;
      if (t.fam == Family::Upper) {
        num = m - g.n3_minus + 0.5;
        den = g.n3_plus;
      } else if (t.fam == Family::Lower) {
        den = g.n3_minus;
      }
      vert[m] = trig_phase(t.sine, t.k3, num, den);
    }
    for (int j1 = 0; j1 < g.n1; ++j1)
      for (int j2 = 0; j2 < g.n2; ++j2) {
        const cplx hz = t.coef * hor[static_cast<std::size_t>(j1) * g.n2 + j2];
        for (int m = 0; m < n3; ++m)
          if (vert[m] != 0.0) out.at(j1, j2, m) += hz * vert[m];
      }
  }
  return out;
}

VectorField sample(const TrigVector& v, const Grid& g) {
  VectorField out;
  for (int i = 0; i < 3; ++i) out.c[i] = sample(v.c[i], g);
  return out;
}

X3Kind natural_layout(const TrigField& f0, const Grid& g, X3Kind fallback) {
  const TrigField f = simplify(f0);
  if (f.terms.empty()) return fallback;
  const bool sine = f.terms.front().sine;
  const bool full = f.terms.front().fam == Family::Full;
  for (const TrigTerm& t : f.terms) {
    if (t.sine != sine || (t.fam == Family::Full) != full) return X3Kind::Nodal;
    if (2 * std::abs(t.k1) >= g.n1 || 2 * std::abs(t.k2) >= g.n2) return X3Kind::Nodal;
    const int N = t.fam == Family::Full ? g.n3() : t.fam == Family::Upper ? g.n3_plus : g.n3_minus;
    if (t.k3 >= N) return X3Kind::Nodal;
  }
  if (full) return sine ? X3Kind::SineFull : X3Kind::CosineFull;
  return sine ? X3Kind::SineHalf : X3Kind::CosineHalf;
}

FieldPair sample_pair(const TrigVector& E, const TrigVector& H, const Grid& g) {
  FieldPair p;
  const FieldPair defaults;
  for (int i = 0; i < 3; ++i) {
    p.c[i] = sample(E.c[i], g);
    p.c[3 + i] = sample(H.c[i], g);
    p.layout[i] = natural_layout(E.c[i], g, defaults.layout[i]);
    p.layout[3 + i] = natural_layout(H.c[i], g, defaults.layout[3 + i]);
  }
  return p;
}

}  // namespace polmax
