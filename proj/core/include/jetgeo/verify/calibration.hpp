#pragma once

#include <vector>

#include "jetgeo/hill/hill.hpp"

namespace jetgeo {

/// The slab alpha < x < beta obtained by adjoining Hill intervals across shared endpoints
/// that are local maxima of G^2 (even-multiplicity roots of 1 - G^2).
struct SlabDomain {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<HillInterval> constituent_intervals;
};

/// I must be one of hill_intervals(G); throws DomainError otherwise.
SlabDomain slab_domain(const Polynomial& G, const HillInterval& I);

struct EikonalCheck {
  /// f'^2 + G^2 - 1 with f' = sign sqrt(1 - G^2).
  double residual = 0.0;
  /// Whether dS/dx = f' is C^1 at x: always at interior points, and at a Hill endpoint
  /// exactly when it is a multiple root of 1 - G^2.
  bool c1 = true;
  bool at_endpoint = false;
};

/// Throws DomainError when G(x)^2 > 1 (x outside every slab).
EikonalCheck eikonal_residual(const Polynomial& F, PencilPoint pt, int sign, double x);

}  // namespace jetgeo
