#include "jetgeo/verify/calibration.hpp"

#include <cmath>

#include "jetgeo/error.hpp"

namespace jetgeo {

SlabDomain slab_domain(const Polynomial& G, const HillInterval& I) {
  const auto all = hill_intervals(G);
  const double tol = 1e-9 * std::max({1.0, std::abs(I.lo), std::abs(I.hi)});
  std::size_t idx = all.size();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (std::abs(all[i].lo - I.lo) <= tol && std::abs(all[i].hi - I.hi) <= tol) idx = i;
  if (idx == all.size()) throw DomainError("slab_domain: I is not a Hill interval of G");

  auto adjoins = [](int multiplicity) { return multiplicity >= 2 && multiplicity % 2 == 0; };
  std::size_t first = idx, last = idx;
  while (first > 0 && adjoins(all[first].lo_multiplicity) && all[first - 1].hi == all[first].lo) --first;
  while (last + 1 < all.size() && adjoins(all[last].hi_multiplicity) && all[last + 1].lo == all[last].hi) ++last;

  SlabDomain out;
  out.alpha = all[first].lo;
  out.beta = all[last].hi;
  out.constituent_intervals.assign(all.begin() + static_cast<std::ptrdiff_t>(first),
                                   all.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  return out;
}

EikonalCheck eikonal_residual(const Polynomial& F, PencilPoint pt, int sign, double x) {
  if (sign != 1 && sign != -1) throw DomainError("eikonal_residual: sign must be +1 or -1");
  const Polynomial G = pencil_member(F, pt);
  const double g = G(x);
  const double w = 1.0 - g * g;
  if (w < -1e-12) throw DomainError("eikonal_residual: x lies outside the slab");
  const double fp = sign * std::sqrt(std::max(0.0, w));
  EikonalCheck out;
  out.residual = fp * fp + g * g - 1.0;
  out.at_endpoint = std::abs(w) <= 1e-12;
  if (out.at_endpoint) {
    const Polynomial dG = G.derivative();
    out.c1 = std::abs(dG(x)) <= 1e-9 * std::max(1.0, dG.abs_eval(x));
  }
  return out;
}

}  // namespace jetgeo
