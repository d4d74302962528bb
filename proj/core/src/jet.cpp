#include "jetgeo/flow/jet.hpp"

#include <cmath>

#include "jetgeo/error.hpp"

namespace jetgeo {
namespace {

double hermite_mid(double y0, double d0, double y1, double d1, double h) {
  return 0.5 * (y0 + y1) + h / 8.0 * (d0 - d1);
}

}  // namespace

PlaneCurve plane_curve(const Polynomial& G, double x0, double uk0, int v_sign, double duration, double step,
                       const FlowOptions& opts) {
  // u_k' = G(x) is the y-equation of the magnetic trace over F = G at (a, b) = (0, 1).
  const MagneticTrace tr = magnetic_trace(G, PencilPoint{0.0, 1.0}, R3Point{x0, uk0, 0.0}, v_sign, duration, step, opts);
  PlaneCurve out;
  out.times = tr.times;
  out.xdot = tr.xdot;
  out.G = G;
  out.step = tr.step;
  out.x.reserve(tr.states.size());
  out.uk.reserve(tr.states.size());
  for (const auto& s : tr.states) {
    out.x.push_back(s.x);
    out.uk.push_back(s.y);
  }
  return out;
}

JetTrace horizontal_lift(const PlaneCurve& plane, int k, const JetState& init) {
  const std::size_t n = plane.times.size();
  if (n == 0 || plane.x.size() != n || plane.xdot.size() != n || plane.uk.size() != n)
    throw DomainError("horizontal_lift: plane curve arrays disagree in length");
  if (k < 0 || init.k() != k) throw DomainError("horizontal_lift: init does not have k + 1 jet coordinates");
  const double scale = std::max({1.0, std::abs(init.x), std::abs(init.u[0])});
  if (std::abs(init.x - plane.x[0]) > 1e-12 * scale || std::abs(init.u[0] - plane.uk[0]) > 1e-12 * scale)
    throw DomainError("horizontal_lift: init is not the start of the plane curve");

  const Polynomial& G = plane.G;
  const Polynomial dG = G.derivative();
  JetTrace out;
  out.times = plane.times;
  out.xdot = plane.xdot;
  out.G = G;
  out.step = plane.step;
  out.states.resize(n);

  std::vector<double> w(init.u.begin() + 1, init.u.end());  // u_{k-1}, ..., u_0
  auto rhs = [&](double uk, double xd, const std::vector<double>& s, std::vector<double>& d) {
    for (std::size_t j = 0; j < s.size(); ++j) d[j] = (j == 0 ? uk : s[j - 1]) * xd;
  };
  const std::size_t m = w.size();
  std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
  auto store = [&](std::size_t i) {
    JetState s;
    s.x = plane.x[i];
    s.u.reserve(m + 1);
    s.u.push_back(plane.uk[i]);
    s.u.insert(s.u.end(), w.begin(), w.end());
    out.states[i] = std::move(s);
  };
  store(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = plane.times[i + 1] - plane.times[i];
    const double x0 = plane.x[i], x1 = plane.x[i + 1];
    const double v0 = plane.xdot[i], v1 = plane.xdot[i + 1];
    const double a0 = -G(x0) * dG(x0), a1 = -G(x1) * dG(x1);
    const double vm = hermite_mid(v0, a0, v1, a1, h);
    const double um = hermite_mid(plane.uk[i], G(x0), plane.uk[i + 1], G(x1), h);
    rhs(plane.uk[i], v0, w, k1);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = w[j] + 0.5 * h * k1[j];
    rhs(um, vm, tmp, k2);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = w[j] + 0.5 * h * k2[j];
    rhs(um, vm, tmp, k3);
    for (std::size_t j = 0; j < m; ++j) tmp[j] = w[j] + h * k3[j];
    rhs(plane.uk[i + 1], v1, tmp, k4);
    for (std::size_t j = 0; j < m; ++j) w[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    store(i + 1);
  }
  return out;
}

JetTrace jet_geodesic(const Polynomial& G, const JetState& init, int v_sign, double duration, double step,
                      const FlowOptions& opts) {
  if (init.u.empty()) throw DomainError("jet_geodesic: empty jet state");
  return horizontal_lift(plane_curve(G, init.x, init.u[0], v_sign, duration, step, opts), init.k(), init);
}

PlaneCurve project_plane(const JetTrace& tr) {
  PlaneCurve out;
  out.times = tr.times;
  out.xdot = tr.xdot;
  out.G = tr.G;
  out.step = tr.step;
  for (const auto& s : tr.states) {
    out.x.push_back(s.x);
    out.uk.push_back(s.u[0]);
  }
  return out;
}

double pfaff_residual(const JetTrace& tr) {
  const Polynomial& G = tr.G;
  const Polynomial dG = G.derivative();
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < tr.states.size(); ++i) {
    const JetState& p = tr.states[i];
    const JetState& q = tr.states[i + 1];
    const double h = tr.times[i + 1] - tr.times[i];
    const double vp = tr.xdot[i], vq = tr.xdot[i + 1];
    const double ap = -G(p.x) * dG(p.x), aq = -G(q.x) * dG(q.x);
    for (std::size_t j = 1; j < p.u.size(); ++j) {
      // f = u[j-1] x', f' = u[j-1]' x' + u[j-1] x''.
      const double dp = (j == 1 ? G(p.x) : p.u[j - 2] * vp);
      const double dq = (j == 1 ? G(q.x) : q.u[j - 2] * vq);
      const double fp = p.u[j - 1] * vp, fq = q.u[j - 1] * vq;
      const double fdp = dp * vp + p.u[j - 1] * ap, fdq = dq * vq + q.u[j - 1] * aq;
      const double integral = 0.5 * h * (fp + fq) + h * h / 12.0 * (fdp - fdq);
      worst = std::max(worst, std::abs(q.u[j] - p.u[j] - integral));
    }
  }
  return worst;
}

std::vector<double> theta_coordinates(const JetState& s) {
  const int k = s.k();
  std::vector<double> theta(static_cast<std::size_t>(k) + 1, 0.0);
  for (int j = 0; j <= k; ++j) {
    double acc = 0.0;
    double term = 1.0;  // x^i / i!
    for (int i = 0; i <= j; ++i) {
      if (i > 0) term *= s.x / i;
      const double sign = ((j - i) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * term * s.u[static_cast<std::size_t>(j - i)];
    }
    theta[static_cast<std::size_t>(j)] = acc;
  }
  return theta;
}

R3Point project_pi_F(const JetState& s, const Polynomial& F) {
  const int deg = F.degree().value_or(0);
  if (deg > s.k()) throw DomainError("project_pi_F: deg F exceeds k");
  const auto theta = theta_coordinates(s);
  double z = 0.0;
  double fact = 1.0;
  for (int j = 0; j <= deg && !F.is_zero(); ++j) {
    if (j > 0) fact *= j;
    z += fact * F.coeff(static_cast<std::size_t>(j)) * theta[static_cast<std::size_t>(j)];
  }
  return {s.x, theta[0], z};
}

JetState dilate(const JetState& s, double h) {
  if (h == 0.0) throw DomainError("dilate: h must be nonzero");
  JetState out;
  out.x = h * s.x;
  out.u.resize(s.u.size());
  double w = h;
  for (std::size_t m = 0; m < s.u.size(); ++m) {
    out.u[m] = w * s.u[m];
    w *= h;
  }
  return out;
}

}  // namespace jetgeo
