#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace polmax {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct DomainSpec {
  double l1 = 1.0;
  double l2 = 1.0;
  double l3_plus = 0.5;
  double l3_minus = 0.5;

  double l3() const { return l3_plus + l3_minus; }
};

struct PhysicalParams {
  double eps = 1.0;
  double mu = 1.0;
  double omega = 1.0;

  // omega^2 eps mu, the Helmholtz wavenumber squared
  double kappa() const { return omega * omega * eps * mu; }
};

struct ValidatedDomain {
  DomainSpec domain;
  PhysicalParams params;
};

enum class GeometryErrc { NonPositiveLength, NonPositiveParameter, IncommensurateBlocks, TooCoarse };

class GeometryError : public std::runtime_error {
public:
  GeometryError(GeometryErrc code, std::string field, const std::string& what)
      : std::runtime_error(what), code_(code), field_(std::move(field)) {}
  GeometryErrc code() const { return code_; }
  const std::string& field() const { return field_; }

private:
  GeometryErrc code_;
  std::string field_;
};

const char* to_string(GeometryErrc c);

ValidatedDomain validate_domain(const DomainSpec& spec, const PhysicalParams& params);
void validate_domain(const DomainSpec& spec);

enum class Block { Lower, Upper, Both };

// Two-block midpoint grid. Vertical index m runs over the whole interval
// (lower block first); x3 = -l3_minus + (m + 1/2) h.
struct Grid {
  DomainSpec domain;
  int n1 = 0;
  int n2 = 0;
  int n3_plus = 0;
  int n3_minus = 0;
  double h = 0.0;

  int n3() const { return n3_plus + n3_minus; }
  int n3_of(Block b) const {
    return b == Block::Lower ? n3_minus : b == Block::Upper ? n3_plus : n3();
  }
  // first global layer of a block
  int m0_of(Block b) const { return b == Block::Upper ? n3_minus : 0; }
  double x1(int j) const { return j * domain.l1 / n1; }
  double x2(int j) const { return j * domain.l2 / n2; }
  double x3(int m) const { return -domain.l3_minus + (m + 0.5) * h; }
  double dx1() const { return domain.l1 / n1; }
  double dx2() const { return domain.l2 / n2; }
  std::size_t size(Block b = Block::Both) const {
    return static_cast<std::size_t>(n1) * n2 * n3_of(b);
  }
};

Grid build_grid(const DomainSpec& domain, int n1, int n2, int n3_plus);
inline Grid build_grid(const ValidatedDomain& vd, int n1, int n2, int n3_plus) {
  return build_grid(vd.domain, n1, n2, n3_plus);
}

bool same_grid(const Grid& a, const Grid& b);

// signed wavenumber for DFT index k on n points: {-n/2+1, ..., n/2}
inline int signed_wavenumber(int k, int n) { return k <= n / 2 ? k : k - n; }
inline bool is_nyquist(int k, int n) { return 2 * k == n; }

}  // namespace polmax
