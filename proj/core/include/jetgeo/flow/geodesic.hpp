#pragma once

#include <vector>

#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

struct FlowOptions {
  /// Rescale |v| to sqrt(1 - G^2) after each step, keeping its sign.
  bool renormalize = true;
  /// Skip the rescaling where 1 - G^2 is below this, i.e. next to a turning point, so the
  /// second-order dynamics can carry v through zero.
  double renormalize_floor = 1e-6;
};

/// Samples of the x-curve x'' = -G G' on the energy shell x'^2 + G^2 = 1.
struct XCurve {
  std::vector<double> times;
  std::vector<double> x;
  std::vector<double> v;
  double step = 0.0;
  /// Launched from a critical endpoint: the curve is the constant equilibrium.
  bool equilibrium = false;
};

/// Fixed-step RK4 on (x, v) with v(0) = v_sign sqrt(1 - G(x0)^2). The step is shrunk to
/// duration / ceil(duration / step) so the grid ends exactly at `duration`.
/// Throws DomainError when G(x0)^2 > 1 or the step/duration are not positive.
XCurve integrate_x(const Polynomial& G, double x0, int v_sign, double duration, double step,
                   const FlowOptions& opts = {});

struct R3Point {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

double distance(const R3Point& a, const R3Point& b);

/// A geodesic of the magnetic space over F: x as above with G = a + bF, y' = G, z' = G F.
struct MagneticTrace {
  std::vector<double> times;
  std::vector<R3Point> states;
  std::vector<double> xdot;
  PencilPoint pencil;
  Polynomial F;
  double step = 0.0;
  bool equilibrium = false;

  /// Cubic Hermite interpolation between samples; t is clamped to the sampled range.
  R3Point at(double t) const;
};

MagneticTrace magnetic_trace(const Polynomial& F, PencilPoint pt, const R3Point& init, int v_sign, double duration,
                             double step, const FlowOptions& opts = {});

/// Largest per-sample deviations of a trace from its defining equations. The ODE parts
/// compare each sample increment with an endpoint-corrected trapezoid of the derivative.
struct TraceResiduals {
  double energy = 0.0;
  double x = 0.0;
  double xdot = 0.0;
  double y = 0.0;
  double z = 0.0;
};

TraceResiduals residuals(const MagneticTrace& tr);

/// Pointwise (x, y, z) -> (-x, y, z) with x' -> -x'. Throws DomainError unless F is even.
MagneticTrace reflect(const MagneticTrace& tr);

/// First time after 0 at which x crosses its initial value moving in its initial direction.
/// Throws NoSolutionError when the trace never returns.
double x_return_time(const MagneticTrace& tr);

struct MaxwellPair {
  MagneticTrace plus;
  MagneticTrace minus;
  double half_period = 0.0;
  /// Distance between the two endpoints.
  double meet_error = 0.0;
  /// (-x_s, y_s + dy/2, z_s + dz/2) from the full-period integrals.
  R3Point predicted;
  double prediction_error = 0.0;
  /// The start sits on a Hill endpoint; only one geodesic leaves it and `minus` is empty.
  bool endpoint_start = false;
};

/// Launches the geodesics with v_sign = +1 and -1 from `start` for half a period.
/// Requires even F and a periodic Hill interval of G around start.x.
MaxwellPair maxwell_pair(const Polynomial& F, PencilPoint pt, const R3Point& start, double step = 1e-3,
                         const FlowOptions& opts = {});

}  // namespace jetgeo
