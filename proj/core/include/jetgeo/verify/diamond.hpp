#pragma once

#include <string_view>

#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

/// Parameter region |a+b| < 1, |a-b| <= 1, b != 0 of the pencil G = a + bF, with its
/// boundary strokes Leg 1 (a+b = -1), Leg 2 (b = 0) and Leg 3 (a+b = +1).
enum class DiamondRegion { InteriorPlus, InteriorMinus, Leg1, Leg2, Leg3, Outside };

std::string_view to_string(DiamondRegion r);

/// Precedence on overlaps: Outside, Leg1, Leg3, Leg2, then the open halves by sign of b.
DiamondRegion diamond_membership(PencilPoint pt, double tol = 1e-12);

enum class DiamondBranch { Plus, Minus };

/// Line coordinates on either half of the diamond.
///   Plus:  a = tau, b = (tau + 1)/|F(u)|, -1 <= tau <= tau_max(u), u > beta; G(u) = -1
///   Minus: a = 1 - tau, b = tau/F(u), tau > 0, u >= beta; G(u) = +1
/// where beta is the first positive point with F(beta) = -1.
struct DiamondCoords {
  double tau = 0.0;
  double u = 0.0;
  DiamondBranch branch = DiamondBranch::Plus;
};

/// (|F(u)| - 1)/(|F(u)| + 1): the tau at which a Plus line meets Leg 3.
double tau_max(const Polynomial& F, double u);

/// Throws DomainError for coordinates outside the branch ranges.
PencilPoint tau_lines(const DiamondCoords& c, const Polynomial& F);

}  // namespace jetgeo
