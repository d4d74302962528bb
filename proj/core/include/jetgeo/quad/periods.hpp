#pragma once

#include "jetgeo/hill/hill.hpp"
#include "jetgeo/quad/singular.hpp"

namespace jetgeo {

/// Full-period integrals over a Hill interval [x0, x1] of G = a + bF:
///   dt = L = 2 int dx / sqrt(1 - G^2),  dy = 2 int G / sqrt(.),  dz = 2 int G F / sqrt(.).
struct Periods {
  IntegralValue dt;
  IntegralValue dy;
  IntegralValue dz;
  bool finite() const { return dt.finite() && dy.finite() && dz.finite(); }
};

Periods periods(const Polynomial& F, PencilPoint pt, const HillInterval& I, const QuadOptions& opts = {});

/// Half of the full-period values, valid for even F on a symmetric interval (-u, u).
/// Throws DomainError otherwise.
Periods half_periods(const Polynomial& F, const Periods& full, const HillInterval& I);

/// Half-period values for even F with the integration running over [0, u], u the first
/// positive point where G^2 = 1:
///   dt = 2 int_0^u dx / sqrt(1-G^2), dy, dz likewise,
///   cost_y = dt - dy = 2 int_0^u sqrt(1-G)/sqrt(1+G),  cost_z = dt - dz.
struct DiamondValues {
  double u = 0.0;
  double G_u = 0.0;
  IntegralValue dt;
  IntegralValue dy;
  IntegralValue dz;
  IntegralValue cost_y;
  IntegralValue cost_z;
};

DiamondValues diamond_periods(const Polynomial& F, PencilPoint pt, const QuadOptions& opts = {});

struct CostPair {
  IntegralValue cost_y;
  IntegralValue cost_z;
};

CostPair cost_functions(const Polynomial& F, PencilPoint pt, const QuadOptions& opts = {});

/// Integrals of the heteroclinic x-curve of F from 0 to delta, doubled.
struct HeteroclinicCosts {
  IntegralValue T;
  IntegralValue dy0;
  IntegralValue dz0;
  IntegralValue cost_y;
  IntegralValue cost_z;
  double delta = 0.0;
};

/// Requires 0 <= delta < 1 (Hill interval normalized to [-1, 1]).
HeteroclinicCosts heteroclinic_costs(const Polynomial& F, double delta, const QuadOptions& opts = {});

/// The delta -> 1 limits of cost_y and cost_z. When F(1) != 1 or F'(1) != 0 the endpoint
/// is not a double root of 1 - F and both values come back Divergent.
struct Cost0Limit {
  IntegralValue cost_y;
  IntegralValue cost_z;
  bool double_root_endpoint = false;
};

Cost0Limit cost0_limit(const Polynomial& F, const QuadOptions& opts = {});

/// First positive point where F = -1.
double outer_endpoint_beta(const Polynomial& F);

/// 2 int_0^u sqrt((1 - F) / (F - F(u))); requires u >= beta.
IntegralValue cost_bdry(const Polynomial& F, double u, const QuadOptions& opts = {});

/// The Leg-3 parameter mu(u) = (-1 - F(u)) / (1 - F(u)).
double leg3_mu(const Polynomial& F, double u);

/// Two-piece lower bound for cost_bdry built from the extreme class members F0 and F1,
/// split at sqrt 3. Requires u >= sqrt 3.
IntegralValue lowbound(double u, const QuadOptions& opts = {});

}  // namespace jetgeo
