#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polmax/trig_series.hpp"

namespace polmax {

enum class Provenance { Full, Upper, Lower, Axial };

const char* to_string(Provenance p);

struct SpectrumEntry {
  double value = 0.0;  // omega^2 units
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;
  Provenance provenance = Provenance::Full;
};

// (4 pi^2 / (eps mu)) (k1^2/L1^2 + k2^2/L2^2 + k3^2/(4 L3^2))
double sigma_value(double L1, double L2, double L3, double eps, double mu, int k1, int k2, int k3);
// the value an entry must carry for its provenance on this domain
double entry_value(const SpectrumEntry& e, const DomainSpec& d, const PhysicalParams& p);

bool spectrum_less(const SpectrumEntry& a, const SpectrumEntry& b);

std::vector<SpectrumEntry> enumerate_sigma(double L1, double L2, double L3, double eps, double mu, double cutoff,
                                           Provenance tag = Provenance::Full);
std::vector<SpectrumEntry> maxwell_spectrum(const DomainSpec& d, const PhysicalParams& p, double cutoff);
// {4 pi^2 k1^2 / (eps mu l1^2)}
std::vector<SpectrumEntry> axial_spectrum(const DomainSpec& d, const PhysicalParams& p, double cutoff);

struct ResonanceDiagnostic {
  double dist_to_sigma_M = 0.0;
  SpectrumEntry nearest;
  double dist_to_sigma_l1 = 0.0;
  SpectrumEntry nearest_axial;
  double rel_sigma_M = 0.0;  // distance / omega^2
  double rel_sigma_l1 = 0.0;
  bool resonant = false;        // omega^2 in sigma_M within tol
  bool resonant_axial = false;  // omega^2 in sigma(l1) within tol
};

ResonanceDiagnostic resonance_check(const PhysicalParams& p, const DomainSpec& d, double tol);

class DegenerateMode : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ModeCase { Bulk, Upper, Lower };

const char* to_string(ModeCase c);
ModeCase mode_case_from_string(const std::string& s);

// closed-form (E, H) with the frequency fixed by its spectrum entry
struct ModeFields {
  TrigVector E;
  TrigVector H;
  PhysicalParams params;
  SpectrumEntry entry;
};

ModeFields eigenmode(const DomainSpec& d, const PhysicalParams& p, ModeCase c, std::array<int, 3> k);
ModeFields full_reflection_mode(const DomainSpec& d, const PhysicalParams& p, ModeCase half, std::array<int, 3> k);
ModeFields helmholtz_only_mode(const DomainSpec& d, const PhysicalParams& p, int k1);

FieldPair sample(const ModeFields& m, const Grid& g);

}  // namespace polmax
