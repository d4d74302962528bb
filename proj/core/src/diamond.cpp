#include "jetgeo/verify/diamond.hpp"

#include <cmath>

#include "jetgeo/error.hpp"
#include "jetgeo/quad/periods.hpp"

namespace jetgeo {

std::string_view to_string(DiamondRegion r) {
  switch (r) {
    case DiamondRegion::InteriorPlus: return "Interior+";
    case DiamondRegion::InteriorMinus: return "Interior-";
    case DiamondRegion::Leg1: return "Leg1";
    case DiamondRegion::Leg2: return "Leg2";
    case DiamondRegion::Leg3: return "Leg3";
    case DiamondRegion::Outside: return "Outside";
  }
  return "?";
}

DiamondRegion diamond_membership(PencilPoint pt, double tol) {
  const double s = pt.a + pt.b;
  const double d = pt.a - pt.b;
  if (std::abs(s) > 1.0 + tol || std::abs(d) > 1.0 + tol) return DiamondRegion::Outside;
  if (std::abs(s + 1.0) <= tol) return DiamondRegion::Leg1;
  if (std::abs(s - 1.0) <= tol) return DiamondRegion::Leg3;
  if (std::abs(pt.b) <= tol) return DiamondRegion::Leg2;
  return pt.b > 0.0 ? DiamondRegion::InteriorPlus : DiamondRegion::InteriorMinus;
}

double tau_max(const Polynomial& F, double u) {
  const double m = std::abs(F(u));
  return (m - 1.0) / (m + 1.0);
}

PencilPoint tau_lines(const DiamondCoords& c, const Polynomial& F) {
  const double beta = outer_endpoint_beta(F);
  const double Fu = F(c.u);
  if (c.branch == DiamondBranch::Plus) {
    if (!(c.u > beta)) throw DomainError("tau_lines: the Plus branch needs u > beta");
    const double tmax = tau_max(F, c.u);
    if (c.tau < -1.0 || c.tau > tmax + 1e-12 * std::max(1.0, std::abs(tmax)))
      throw DomainError("tau_lines: tau outside [-1, tau_max(u)]");
    return {c.tau, (c.tau + 1.0) / std::abs(Fu)};
  }
  if (c.u < beta * (1.0 - 1e-12)) throw DomainError("tau_lines: the Minus branch needs u >= beta");
  if (!(c.tau > 0.0)) throw DomainError("tau_lines: the Minus branch needs tau > 0");
  const PencilPoint pt{1.0 - c.tau, c.tau / Fu};
  if (diamond_membership(pt) == DiamondRegion::Outside) throw DomainError("tau_lines: point leaves the diamond");
  return pt;
}

}  // namespace jetgeo
