#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jetgeo/quad/periods.hpp"
#include "jetgeo/verify/diamond.hpp"

namespace jetgeo {

struct MonotonicityScan {
  double u = 0.0;
  double tau_max = 0.0;
  std::vector<double> tau;
  std::vector<IntegralValue> cost_y;
  /// cost_y[i+1] - cost_y[i]; NaN where either end is not finite.
  std::vector<double> differences;
  bool all_negative = false;
  int divergent_points = 0;
  /// Largest sampled value of the tau-derivative integrand
  /// -(1+G)^{-3/2} (1-G)^{-1/2} (F(x) - F(u)) / |F(u)|.
  double certificate_max = 0.0;
  int certificate_samples = 0;
  bool certificate_nonpositive = false;
};

/// tau_i = -1 + (tau_max + 1)(i + 1)/n for i = 0..n-1; the last point lies on Leg 3.
std::vector<double> default_tau_grid(const Polynomial& F, double u, int n = 20);

/// Cost_y along the Plus tau-line through u. The sign certificate is sampled at
/// `certificate_points` midpoints of (0, u) for every tau of the grid.
MonotonicityScan cost_monotonicity_scan(const Polynomial& F, double u, const std::vector<double>& tau_grid,
                                        const QuadOptions& opts = {}, int certificate_points = 100);

enum class LegKind { Leg1, Leg2Minus, PointOneZeroMinus };

std::string_view to_string(LegKind k);

struct LegRow {
  PencilPoint pt;
  double distance = 0.0;
  DiamondValues values;
};

struct LegScan {
  LegKind leg = LegKind::Leg1;
  std::vector<LegRow> rows;
  std::string claim;
  bool claim_holds = false;
  /// The monitored quantity (dy, dz or cost_z) at the first and last rows.
  double first = 0.0;
  double last = 0.0;
};

struct LegApproachOptions {
  int steps = 13;
  double start_distance = 0.1;
  /// a for the Leg 2 approach (a, -eps).
  double leg2_a = 0.5;
  /// Fixed u of the Minus line used for the approach to (1, 0).
  double point10_u = 2.0;
  double growth = 10.0;
};

/// Geometric approach sequences, distance start * 2^-j:
///   Leg1:   (-1/2 + d/2, -1/2 + d/2)
///   Leg2-:  (leg2_a, -d)
///   (1,0)-: a = 1 - d, b = d / F(point10_u)
std::vector<PencilPoint> default_leg_approach(const Polynomial& F, LegKind leg, const LegApproachOptions& o = {});

/// Evaluates the half-period values along the approach and tests the divergence claim:
///   Leg1:   dy strictly decreasing, last dy < 0
///   Leg2-:  dz strictly decreasing, |last| >= growth |first|
///   (1,0)-: cost_z strictly increasing, last >= growth first
/// Throws DomainError if a point leaves the diamond or the b < 0 half.
LegScan leg_divergence_scan(const Polynomial& F, LegKind leg, const std::vector<PencilPoint>& approach,
                            const QuadOptions& opts = {}, double growth = 10.0);

struct Inversion {
  double estimate = 0.0;
  double exact = 0.0;
  double gap = 0.0;
};

/// Solves p(x) = y for the largest real root and compares with the two-term expansion
/// (y / a_n)^{1/n} - a_{n-1} / (n a_n). Requires a positive leading coefficient.
/// Throws NoSolutionError when p(x) = y has no real root.
Inversion invert_at_infinity(const Polynomial& p, double y);

}  // namespace jetgeo
