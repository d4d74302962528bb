#pragma once

#include <vector>

#include "jetgeo/flow/geodesic.hpp"
#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

/// A point (x, u_k, u_{k-1}, ..., u_0) of the jet space J^k; u[j] holds u_{k-j}.
struct JetState {
  double x = 0.0;
  std::vector<double> u;

  int k() const { return static_cast<int>(u.size()) - 1; }
  /// u_m for 0 <= m <= k.
  double u_index(int m) const { return u[static_cast<std::size_t>(k() - m)]; }
};

/// Plane curve (x, u_k)(t) on a uniform grid, together with the G that drives it:
/// x'' = -G G', u_k' = G(x).
struct PlaneCurve {
  std::vector<double> times;
  std::vector<double> x;
  std::vector<double> xdot;
  std::vector<double> uk;
  Polynomial G;
  double step = 0.0;
};

PlaneCurve plane_curve(const Polynomial& G, double x0, double uk0, int v_sign, double duration, double step,
                       const FlowOptions& opts = {});

struct JetTrace {
  std::vector<double> times;
  std::vector<JetState> states;
  std::vector<double> xdot;
  Polynomial G;
  double step = 0.0;
};

/// Integrates u_{i-1}' = u_i x' down to u_0 with RK4 on the sample grid. The half-step
/// stage values of x' and u_k come from cubic Hermite interpolation with the known
/// derivatives. Throws DomainError if init does not match the curve at t = 0.
JetTrace horizontal_lift(const PlaneCurve& plane, int k, const JetState& init);

/// plane_curve followed by horizontal_lift.
JetTrace jet_geodesic(const Polynomial& G, const JetState& init, int v_sign, double duration, double step,
                      const FlowOptions& opts = {});

/// The projection (x, u_k) of a lifted trace.
PlaneCurve project_plane(const JetTrace& tr);

/// Largest per-step Pfaffian residual |du_{i-1} - u_i dx| over all i and steps; each
/// integral of u_i dx is an endpoint-corrected trapezoid.
double pfaff_residual(const JetTrace& tr);

/// theta_j = sum_{i=0..j} (-1)^{j-i} x^i / i! u_{k+i-j}, j = 0..k.
std::vector<double> theta_coordinates(const JetState& s);

/// (x, theta_0, sum_j a_j theta_j) with F = sum_j a_j x^j / j!. Requires deg F <= k.
R3Point project_pi_F(const JetState& s, const Polynomial& F);

/// (h x, h u_k, h^2 u_{k-1}, ..., h^{k+1} u_0). Throws DomainError for h = 0.
JetState dilate(const JetState& s, double h);

}  // namespace jetgeo
