#include "jetgeo/flow/geodesic.hpp"

#include <array>
#include <cmath>

#include "jetgeo/error.hpp"
#include "jetgeo/hill/hill.hpp"
#include "jetgeo/quad/periods.hpp"

namespace jetgeo {
namespace {

using State = std::array<double, 4>;  // x, v, y, z

struct Field {
  Polynomial G, dG, F;
  State operator()(const State& s) const {
    const double g = G(s[0]);
    return {s[1], -g * dG(s[0]), g, g * F(s[0])};
  }
};

State axpy(const State& s, double h, const State& k) {
  return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2], s[3] + h * k[3]};
}

int grid_count(double duration, double step) {
  if (!(duration > 0.0) || !(step > 0.0)) throw DomainError("flow: duration and step must be positive");
  const double n = std::ceil(duration / step - 1e-9);
  if (n > 5e7) throw DomainError("flow: too many steps requested");
  return std::max(1, static_cast<int>(n));
}

struct RawTrace {
  std::vector<double> t;
  std::vector<State> s;
  double h = 0.0;
  bool equilibrium = false;
};

RawTrace integrate(const Polynomial& G, const Polynomial& F, double x0, int v_sign, double y0, double z0,
                   double duration, double step, const FlowOptions& opts) {
  if (v_sign != 1 && v_sign != -1) throw DomainError("flow: v_sign must be +1 or -1");
  const int n = grid_count(duration, step);
  RawTrace out;
  out.h = duration / n;
  const Field f{G, G.derivative(), F};
  const double g0 = G(x0);
  const double w0 = 1.0 - g0 * g0;
  if (w0 < -1e-12) throw DomainError("flow: G(x0)^2 > 1, start lies outside the Hill region");

  out.t.resize(static_cast<std::size_t>(n) + 1);
  out.s.resize(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) out.t[i] = i * out.h;

  const double dg0 = f.dG(x0);
  if (w0 <= 1e-14 && std::abs(dg0) <= 1e-9 * std::max(1.0, f.dG.abs_eval(x0))) {
    out.equilibrium = true;
    for (int i = 0; i <= n; ++i) out.s[i] = {x0, 0.0, y0 + g0 * out.t[i], z0 + g0 * F(x0) * out.t[i]};
    return out;
  }

  State s{x0, v_sign * std::sqrt(std::max(0.0, w0)), y0, z0};
  out.s[0] = s;
  const double h = out.h;
  for (int i = 1; i <= n; ++i) {
    const State k1 = f(s);
    const State k2 = f(axpy(s, 0.5 * h, k1));
    const State k3 = f(axpy(s, 0.5 * h, k2));
    const State k4 = f(axpy(s, h, k3));
    for (int c = 0; c < 4; ++c) s[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    if (opts.renormalize) {
      const double g = G(s[0]);
      const double w = 1.0 - g * g;
      if (w > opts.renormalize_floor && s[1] != 0.0) s[1] = std::copysign(std::sqrt(w), s[1]);
    }
    out.s[i] = s;
  }
  return out;
}

double hermite(double y0, double d0, double y1, double d1, double h, double theta) {
  const double t2 = theta * theta, t3 = t2 * theta;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + theta) * h * d0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}

}  // namespace

XCurve integrate_x(const Polynomial& G, double x0, int v_sign, double duration, double step, const FlowOptions& opts) {
  const RawTrace raw = integrate(G, Polynomial{}, x0, v_sign, 0.0, 0.0, duration, step, opts);
  XCurve out;
  out.times = raw.t;
  out.step = raw.h;
  out.equilibrium = raw.equilibrium;
  out.x.reserve(raw.s.size());
  out.v.reserve(raw.s.size());
  for (const auto& s : raw.s) {
    out.x.push_back(s[0]);
    out.v.push_back(s[1]);
  }
  return out;
}

double distance(const R3Point& a, const R3Point& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}

MagneticTrace magnetic_trace(const Polynomial& F, PencilPoint pt, const R3Point& init, int v_sign, double duration,
                             double step, const FlowOptions& opts) {
  const Polynomial G = pencil_member(F, pt);
  const RawTrace raw = integrate(G, F, init.x, v_sign, init.y, init.z, duration, step, opts);
  MagneticTrace out;
  out.times = raw.t;
  out.step = raw.h;
  out.pencil = pt;
  out.F = F;
  out.equilibrium = raw.equilibrium;
  out.states.reserve(raw.s.size());
  out.xdot.reserve(raw.s.size());
  for (const auto& s : raw.s) {
    out.states.push_back({s[0], s[2], s[3]});
    out.xdot.push_back(s[1]);
  }
  return out;
}

R3Point MagneticTrace::at(double t) const {
  if (times.empty()) throw DomainError("MagneticTrace::at: empty trace");
  if (times.size() == 1 || t <= times.front()) return states.front();
  if (t >= times.back()) return states.back();
  const std::size_t i = std::min(static_cast<std::size_t>((t - times.front()) / step), times.size() - 2);
  const double h = times[i + 1] - times[i];
  const double theta = (t - times[i]) / h;
  const Polynomial G = pencil_member(F, pencil);
  const R3Point& a = states[i];
  const R3Point& b = states[i + 1];
  const double ga = G(a.x), gb = G(b.x);
  return {hermite(a.x, xdot[i], b.x, xdot[i + 1], h, theta), hermite(a.y, ga, b.y, gb, h, theta),
          hermite(a.z, ga * F(a.x), b.z, gb * F(b.x), h, theta)};
}

TraceResiduals residuals(const MagneticTrace& tr) {
  TraceResiduals r;
  const Polynomial G = pencil_member(tr.F, tr.pencil);
  const Polynomial dG = G.derivative();
  const Polynomial ddG = dG.derivative();
  const Polynomial GF = G * tr.F;
  const Polynomial dGF = GF.derivative();
  struct Local {
    double x, v, g, a, jerk, gdot, f, fdot;
  };
  auto local = [&](std::size_t i) {
    const double x = tr.states[i].x, v = tr.xdot[i];
    const double g = G(x), dg = dG(x);
    return Local{x, v, g, -g * dg, -(dg * dg + g * ddG(x)) * v, dg * v, GF(x), dGF(x) * v};
  };
  auto corrected = [](double h, double f0, double f1, double d0, double d1) {
    return 0.5 * h * (f0 + f1) + h * h / 12.0 * (d0 - d1);
  };
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    const Local p = local(i);
    r.energy = std::max(r.energy, std::abs(p.v * p.v + p.g * p.g - 1.0));
    if (i + 1 == tr.states.size()) break;
    const Local q = local(i + 1);
    const double h = tr.times[i + 1] - tr.times[i];
    r.x = std::max(r.x, std::abs(q.x - p.x - corrected(h, p.v, q.v, p.a, q.a)));
    r.xdot = std::max(r.xdot, std::abs(q.v - p.v - corrected(h, p.a, q.a, p.jerk, q.jerk)));
    r.y = std::max(r.y, std::abs(tr.states[i + 1].y - tr.states[i].y - corrected(h, p.g, q.g, p.gdot, q.gdot)));
    r.z = std::max(r.z, std::abs(tr.states[i + 1].z - tr.states[i].z - corrected(h, p.f, q.f, p.fdot, q.fdot)));
  }
  return r;
}

MagneticTrace reflect(const MagneticTrace& tr) {
  if (!tr.F.is_even()) throw DomainError("reflect: F is not even");
  MagneticTrace out = tr;
  for (auto& s : out.states) s.x = -s.x;
  for (auto& v : out.xdot) v = -v;
  return out;
}

double x_return_time(const MagneticTrace& tr) {
  const std::size_t n = tr.states.size();
  if (n < 3) throw NoSolutionError("x_return_time: trace too short");
  const double x0 = tr.states[0].x;
  double dir = tr.xdot[0] != 0.0 ? std::copysign(1.0, tr.xdot[0]) : std::copysign(1.0, tr.states[1].x - x0);
  auto d = [&](std::size_t i) { return dir * (tr.states[i].x - x0); };
  std::size_t i = 1;
  while (i < n && d(i) >= 0.0) ++i;
  while (i < n && d(i) < 0.0) ++i;
  if (i >= n) throw NoSolutionError("x_return_time: x does not return within the trace");
  // Root of the Hermite interpolant on [t_{i-1}, t_i].
  const double h = tr.times[i] - tr.times[i - 1];
  auto interp = [&](double theta) {
    return dir * (hermite(tr.states[i - 1].x, tr.xdot[i - 1], tr.states[i].x, tr.xdot[i], h, theta) - x0);
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (interp(mid) < 0.0 ? lo : hi) = mid;
  }
  return tr.times[i - 1] + 0.5 * (lo + hi) * h;
}

MaxwellPair maxwell_pair(const Polynomial& F, PencilPoint pt, const R3Point& start, double step, const FlowOptions& opts) {
  if (!F.is_even()) throw DomainError("maxwell_pair: F is not even");
  const Polynomial G = pencil_member(F, pt);
  const double g = G(start.x);
  MaxwellPair out;
  const auto intervals = hill_intervals(G);
  const HillInterval* I = nullptr;
  for (const auto& c : intervals)
    if (c.lo <= start.x && start.x <= c.hi) I = &c;
  if (I == nullptr) throw DomainError("maxwell_pair: start lies outside the Hill region");
  if (classify(G, *I) != GeodesicClass::Periodic) throw DomainError("maxwell_pair: Hill interval is not periodic");
  const Periods full = periods(F, pt, *I);
  if (!full.finite()) throw ConvergenceError("maxwell_pair: period integrals failed");
  const Periods half = half_periods(F, full, *I);
  out.half_period = half.dt.value;
  out.predicted = {-start.x, start.y + half.dy.value, start.z + half.dz.value};

  if (1.0 - g * g <= 1e-14) {
    // Turning point: both branches coincide.
    out.endpoint_start = true;
    out.plus = magnetic_trace(F, pt, start, 1, out.half_period, step, opts);
    out.prediction_error = distance(out.plus.states.back(), out.predicted);
    return out;
  }
  out.plus = magnetic_trace(F, pt, start, 1, out.half_period, step, opts);
  out.minus = magnetic_trace(F, pt, start, -1, out.half_period, step, opts);
  out.meet_error = distance(out.plus.states.back(), out.minus.states.back());
  out.prediction_error = std::max(distance(out.plus.states.back(), out.predicted),
                                  distance(out.minus.states.back(), out.predicted));
  return out;
}

}  // namespace jetgeo
