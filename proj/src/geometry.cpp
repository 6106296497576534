#include "polmax/geometry.hpp"

#include <cmath>

#include <fmt/format.h>

namespace polmax {

const char* to_string(GeometryErrc c) {
  switch (c) {
    case GeometryErrc::NonPositiveLength: return "NonPositiveLength";
    case GeometryErrc::NonPositiveParameter: return "NonPositiveParameter";
    case GeometryErrc::IncommensurateBlocks: return "IncommensurateBlocks";
    case GeometryErrc::TooCoarse: return "TooCoarse";
  }
  return "unknown";
}

namespace {

void require_positive(double v, const char* name, GeometryErrc code) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw GeometryError(code, name, fmt::format("{}({}): value {} must be positive", to_string(code), name, v));
}

}  // namespace

void validate_domain(const DomainSpec& spec) {
  require_positive(spec.l1, "l1", GeometryErrc::NonPositiveLength);
  require_positive(spec.l2, "l2", GeometryErrc::NonPositiveLength);
  require_positive(spec.l3_plus, "l3_plus", GeometryErrc::NonPositiveLength);
  require_positive(spec.l3_minus, "l3_minus", GeometryErrc::NonPositiveLength);
}

ValidatedDomain validate_domain(const DomainSpec& spec, const PhysicalParams& params) {
  validate_domain(spec);
  require_positive(params.eps, "eps", GeometryErrc::NonPositiveParameter);
  require_positive(params.mu, "mu", GeometryErrc::NonPositiveParameter);
  require_positive(params.omega, "omega", GeometryErrc::NonPositiveParameter);
  return {spec, params};
}

Grid build_grid(const DomainSpec& domain, int n1, int n2, int n3_plus) {
  validate_domain(domain);
  auto coarse = [](const char* name, int v, const char* rule) {
    throw GeometryError(GeometryErrc::TooCoarse, name, fmt::format("TooCoarse({}): {} violates {}", name, v, rule));
  };
  if (n1 < 4 || n1 % 2 != 0) coarse("n1", n1, "n1 >= 4 and even");
  if (n2 < 4 || n2 % 2 != 0) coarse("n2", n2, "n2 >= 4 and even");
  if (n3_plus < 2) coarse("n3_plus", n3_plus, "n3_plus >= 2");

  const double ratio = n3_plus * domain.l3_minus / domain.l3_plus;
  const double rounded = std::round(ratio);
  if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
    throw GeometryError(GeometryErrc::IncommensurateBlocks, "n3_plus",
                        fmt::format("IncommensurateBlocks: n3_plus={} gives n3_minus={} (not whole)", n3_plus, ratio));
  const int n3_minus = static_cast<int>(rounded);
  if (n3_minus < 2) coarse("n3_minus", n3_minus, "n3_minus >= 2");

  Grid g;
  g.domain = domain;
  g.n1 = n1;
  g.n2 = n2;
  g.n3_plus = n3_plus;
  g.n3_minus = n3_minus;
  g.h = domain.l3() / (n3_plus + n3_minus);
  return g;
}

bool same_grid(const Grid& a, const Grid& b) {
  return a.n1 == b.n1 && a.n2 == b.n2 && a.n3_plus == b.n3_plus && a.n3_minus == b.n3_minus &&
         a.domain.l1 == b.domain.l1 && a.domain.l2 == b.domain.l2 && a.domain.l3_plus == b.domain.l3_plus &&
         a.domain.l3_minus == b.domain.l3_minus;
}

}  // namespace polmax
