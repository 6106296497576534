#include "polmax/spectrum_modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include <fmt/format.h>

namespace polmax {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Full: return "full";
    case Provenance::Upper: return "upper";
    case Provenance::Lower: return "lower";
    case Provenance::Axial: return "axial";
  }
  return "?";
}

const char* to_string(ModeCase c) {
  switch (c) {
    case ModeCase::Bulk: return "bulk";
    case ModeCase::Upper: return "upper";
    case ModeCase::Lower: return "lower";
  }
  return "?";
}

ModeCase mode_case_from_string(const std::string& s) {
  if (s == "bulk") return ModeCase::Bulk;
  if (s == "upper") return ModeCase::Upper;
  if (s == "lower") return ModeCase::Lower;
  throw std::invalid_argument("unknown mode case '" + s + "'");
}

double sigma_value(double L1, double L2, double L3, double eps, double mu, int k1, int k2, int k3) {
  const double s = static_cast<double>(k1) * k1 / (L1 * L1) + static_cast<double>(k2) * k2 / (L2 * L2) +
                   static_cast<double>(k3) * k3 / (4.0 * L3 * L3);
  return 4.0 * kPi * kPi / (eps * mu) * s;
}

double entry_value(const SpectrumEntry& e, const DomainSpec& d, const PhysicalParams& p) {
  switch (e.provenance) {
    case Provenance::Full: return sigma_value(d.l1, d.l2, d.l3(), p.eps, p.mu, e.k1, e.k2, e.k3);
    case Provenance::Upper: return sigma_value(d.l1, d.l2, d.l3_plus, p.eps, p.mu, e.k1, e.k2, e.k3);
    case Provenance::Lower: return sigma_value(d.l1, d.l2, d.l3_minus, p.eps, p.mu, e.k1, e.k2, e.k3);
    case Provenance::Axial: return sigma_value(d.l1, d.l2, d.l3(), p.eps, p.mu, e.k1, 0, 0);
  }
  return 0.0;
}

bool spectrum_less(const SpectrumEntry& a, const SpectrumEntry& b) {
  return std::make_tuple(a.value, a.k1, a.k2, a.k3, static_cast<int>(a.provenance)) <
         std::make_tuple(b.value, b.k1, b.k2, b.k3, static_cast<int>(b.provenance));
}

std::vector<SpectrumEntry> enumerate_sigma(double L1, double L2, double L3, double eps, double mu, double cutoff,
                                           Provenance tag) {
  std::vector<SpectrumEntry> out;
  if (cutoff < 0.0) return out;
  // k1 / L1 <= sqrt(cutoff eps mu) / (2 pi), and likewise for the other two indices
  const double r = std::sqrt(cutoff * eps * mu) / (2.0 * kPi);
  const int m1 = static_cast<int>(std::floor(r * L1)) + 1;
  const int m2 = static_cast<int>(std::floor(r * L2)) + 1;
  const int m3 = static_cast<int>(std::floor(2.0 * r * L3)) + 1;
  for (int k1 = 0; k1 <= m1; ++k1)
    for (int k2 = 0; k2 <= m2; ++k2)
      for (int k3 = 0; k3 <= m3; ++k3) {
        const double v = sigma_value(L1, L2, L3, eps, mu, k1, k2, k3);
        if (v <= cutoff) out.push_back({v, k1, k2, k3, tag});
      }
  std::sort(out.begin(), out.end(), spectrum_less);
  return out;
}

std::vector<SpectrumEntry> maxwell_spectrum(const DomainSpec& d, const PhysicalParams& p, double cutoff) {
  std::vector<SpectrumEntry> out = enumerate_sigma(d.l1, d.l2, d.l3(), p.eps, p.mu, cutoff, Provenance::Full);
  for (auto [L3, tag] : {std::pair{d.l3_plus, Provenance::Upper}, std::pair{d.l3_minus, Provenance::Lower}}) {
    auto part = enumerate_sigma(d.l1, d.l2, L3, p.eps, p.mu, cutoff, tag);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end(), spectrum_less);
  return out;
}

std::vector<SpectrumEntry> axial_spectrum(const DomainSpec& d, const PhysicalParams& p, double cutoff) {
  std::vector<SpectrumEntry> out;
  for (int k1 = 0;; ++k1) {
    SpectrumEntry e{0.0, k1, 0, 0, Provenance::Axial};
    e.value = entry_value(e, d, p);
    if (e.value > cutoff) break;
    out.push_back(e);
  }
  return out;
}

namespace {
std::pair<double, SpectrumEntry> nearest_of(const std::vector<SpectrumEntry>& list, double w2) {
  double best = std::numeric_limits<double>::infinity();
  SpectrumEntry arg;
  for (const SpectrumEntry& e : list) {
    const double dist = std::abs(e.value - w2);
    if (dist < best) {
      best = dist;
      arg = e;
    }
  }
  return {best, arg};
}
}  // namespace

ResonanceDiagnostic resonance_check(const PhysicalParams& p, const DomainSpec& d, double tol) {
  const double w2 = p.omega * p.omega;
  const double cutoff = 2.0 * w2 + 1.0;
  ResonanceDiagnostic r;
  std::tie(r.dist_to_sigma_M, r.nearest) = nearest_of(maxwell_spectrum(d, p, cutoff), w2);
  std::tie(r.dist_to_sigma_l1, r.nearest_axial) = nearest_of(axial_spectrum(d, p, cutoff), w2);
  r.rel_sigma_M = r.dist_to_sigma_M / w2;
  r.rel_sigma_l1 = r.dist_to_sigma_l1 / w2;
  r.resonant = r.rel_sigma_M < tol;
  r.resonant_axial = r.rel_sigma_l1 < tol;
  return r;
}

namespace {

PhysicalParams tuned(const PhysicalParams& p, const SpectrumEntry& e) {
  PhysicalParams q = p;
  q.omega = std::sqrt(e.value);
  return q;
}

TrigField lap_23(const TrigField& w, const DomainSpec& d) { return (-1.0) * (d2(d2(w, d), d) + d3(d3(w, d), d)); }

void require_nonzero(const ModeFields& m, const std::string& what) {
  if (is_zero(m.E) && is_zero(m.H)) throw DegenerateMode(what);
}

}  // namespace

ModeFields eigenmode(const DomainSpec& d, const PhysicalParams& p, ModeCase c, std::array<int, 3> k) {
  const auto [k1, k2, k3] = k;
  if (k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("mode indices must be nonnegative");
  ModeFields m;
  if (c == ModeCase::Bulk) {
    m.entry = {0.0, k1, k2, k3, Provenance::Full};
    m.entry.value = entry_value(m.entry, d, p);
    m.params = tuned(p, m.entry);
    const TrigField w = cos_cos(k1, k2, false, k3, Family::Full);
    const cplx s = 1.0 / cplx(0.0, m.params.omega * m.params.mu);
    m.E = {{TrigField{}, d3(w, d), (-1.0) * d2(w, d)}};
    m.H = s * TrigVector{{lap_23(w, d), d1(d2(w, d), d), d1(d3(w, d), d)}};
    if (m.entry.value == 0.0)
      throw DegenerateMode(fmt::format("bulk mode ({},{},{}): w is constant", k1, k2, k3));
    require_nonzero(m, fmt::format("bulk mode ({},{},{}): E = (0, d3 w, -d2 w) vanishes since k2 = k3 = 0", k1, k2, k3));
    return m;
  }
  if (k3 == 0)
    throw DegenerateMode(fmt::format("{} mode ({},{},0): w = sin(0) vanishes identically", to_string(c), k1, k2));
  const bool up = c == ModeCase::Upper;
  m.entry = {0.0, k1, k2, k3, up ? Provenance::Upper : Provenance::Lower};
  m.entry.value = entry_value(m.entry, d, p);
  m.params = tuned(p, m.entry);
  // sin(pi k3 x3 / l3-) = (-1)^k3 sin(pi k3 (x3 + l3-) / l3-)
  const cplx sign = up || k3 % 2 == 0 ? 1.0 : -1.0;
  const TrigField w = cos_cos(k1, k2, true, k3, up ? Family::Upper : Family::Lower, sign);
  const cplx s = 1.0 / cplx(0.0, -m.params.omega * m.params.eps);
  m.H = {{TrigField{}, d3(w, d), (-1.0) * d2(w, d)}};
  m.E = s * TrigVector{{lap_23(w, d), d1(d2(w, d), d), d1(d3(w, d), d)}};
  require_nonzero(m, fmt::format("{} mode ({},{},{}) vanishes", to_string(c), k1, k2, k3));
  return m;
}

ModeFields full_reflection_mode(const DomainSpec& d, const PhysicalParams& p, ModeCase half, std::array<int, 3> k) {
  const auto [k1, k2, k3] = k;
  if (half == ModeCase::Bulk) throw std::invalid_argument("full-reflection mode needs the upper or lower half");
  if (k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("mode indices must be nonnegative");
  if (k3 == 0)
    throw DegenerateMode(fmt::format("full-reflection mode ({},{},0): w = sin(0) vanishes identically", k1, k2));
  const bool up = half == ModeCase::Upper;
  ModeFields m;
  m.entry = {0.0, k1, k2, k3, up ? Provenance::Upper : Provenance::Lower};
  m.entry.value = entry_value(m.entry, d, p);
  m.params = tuned(p, m.entry);
  const cplx sign = up || k3 % 2 == 0 ? 1.0 : -1.0;
  const TrigField w = cos_cos(k1, k2, true, k3, up ? Family::Upper : Family::Lower, sign);
  const cplx s = 1.0 / cplx(0.0, -m.params.omega * m.params.eps);
  m.H = {{(-1.0) * d3(w, d), TrigField{}, d1(w, d)}};
  m.E = s * TrigVector{{d1(d2(w, d), d), (-1.0) * (d1(d1(w, d), d) + d3(d3(w, d), d)), d2(d3(w, d), d)}};
  require_nonzero(m, fmt::format("full-reflection mode ({},{},{}) vanishes", k1, k2, k3));
  return m;
}

ModeFields helmholtz_only_mode(const DomainSpec& d, const PhysicalParams& p, int k1) {
  if (k1 < 1) throw std::invalid_argument("helmholtz-only mode needs k1 >= 1");
  ModeFields m;
  m.entry = {0.0, k1, 0, 0, Provenance::Axial};
  m.entry.value = entry_value(m.entry, d, p);
  m.params = tuned(p, m.entry);
  // sin(a x1) = (e^{i a x1} - e^{-i a x1}) / 2i
  TrigField e2;
  e2.terms.push_back({cplx(0.0, -0.5), k1, 0, false, 0, Family::Full});
  e2.terms.push_back({cplx(0.0, 0.5), -k1, 0, false, 0, Family::Full});
  m.E = {{TrigField{}, e2, TrigField{}}};
  return m;
}

FieldPair sample(const ModeFields& m, const Grid& g) { return sample_pair(m.E, m.H, g); }

}  // namespace polmax
