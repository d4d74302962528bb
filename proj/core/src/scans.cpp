#include "jetgeo/verify/scans.hpp"

#include <cmath>
#include <limits>

#include "jetgeo/error.hpp"
#include "jetgeo/hill/roots.hpp"

namespace jetgeo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<double> default_tau_grid(const Polynomial& F, double u, int n) {
  if (n < 2) throw DomainError("default_tau_grid: need at least two points");
  const double tmax = tau_max(F, u);
  std::vector<double> grid;
  for (int i = 0; i < n; ++i) grid.push_back(i + 1 == n ? tmax : -1.0 + (tmax + 1.0) * (i + 1) / n);
  return grid;
}

MonotonicityScan cost_monotonicity_scan(const Polynomial& F, double u, const std::vector<double>& tau_grid,
                                        const QuadOptions& opts, int certificate_points) {
  MonotonicityScan scan;
  scan.u = u;
  scan.tau_max = tau_max(F, u);
  scan.tau = tau_grid;
  const double Fu = F(u);
  scan.certificate_max = -kInf;

  for (double tau : tau_grid) {
    const PencilPoint pt = tau_lines({tau, u, DiamondBranch::Plus}, F);
    IntegralValue c;
    if (tau == -1.0) {
      c = IntegralValue::divergent(1, "G is the constant -1");
    } else {
      c = cost_functions(F, pt, opts).cost_y;
    }
    if (!c.finite()) ++scan.divergent_points;
    scan.cost_y.push_back(c);

    const Polynomial G = pencil_member(F, pt);
    for (int i = 0; i < certificate_points; ++i) {
      const double x = u * (i + 0.5) / certificate_points;
      const double g = G(x);
      const double p = 1.0 + g, m = 1.0 - g;
      double v = -kInf;
      if (p > 0.0 && m > 0.0) v = -std::pow(p, -1.5) / std::sqrt(m) * (F(x) - Fu) / std::abs(Fu);
      scan.certificate_max = std::max(scan.certificate_max, v);
      ++scan.certificate_samples;
    }
  }

  scan.all_negative = scan.cost_y.size() >= 2;
  for (std::size_t i = 0; i + 1 < scan.cost_y.size(); ++i) {
    const auto& a = scan.cost_y[i];
    const auto& b = scan.cost_y[i + 1];
    double d = kNaN;
    if (a.finite() && b.finite()) {
      d = b.value - a.value;
    } else if (a.status == IntegralStatus::Divergent && a.direction > 0 && b.finite()) {
      d = -kInf;
    }
    scan.differences.push_back(d);
    if (!(d < 0.0)) scan.all_negative = false;
  }
  scan.certificate_nonpositive = scan.certificate_samples > 0 && scan.certificate_max <= 0.0;
  return scan;
}

std::string_view to_string(LegKind k) {
  switch (k) {
    case LegKind::Leg1: return "Leg1";
    case LegKind::Leg2Minus: return "Leg2-";
    case LegKind::PointOneZeroMinus: return "(1,0)-";
  }
  return "?";
}

std::vector<PencilPoint> default_leg_approach(const Polynomial& F, LegKind leg, const LegApproachOptions& o) {
  std::vector<PencilPoint> pts;
  const double Fu = F(o.point10_u);
  for (int j = 0; j < o.steps; ++j) {
    const double d = o.start_distance * std::ldexp(1.0, -j);
    switch (leg) {
      case LegKind::Leg1: pts.push_back({-0.5 + 0.5 * d, -0.5 + 0.5 * d}); break;
      case LegKind::Leg2Minus: pts.push_back({o.leg2_a, -d}); break;
      case LegKind::PointOneZeroMinus: pts.push_back({1.0 - d, d / Fu}); break;
    }
  }
  return pts;
}

LegScan leg_divergence_scan(const Polynomial& F, LegKind leg, const std::vector<PencilPoint>& approach,
                            const QuadOptions& opts, double growth) {
  LegScan scan;
  scan.leg = leg;
  for (const auto& pt : approach) {
    const DiamondRegion r = diamond_membership(pt);
    if (r != DiamondRegion::InteriorMinus) throw DomainError("leg_divergence_scan: approach point leaves the b < 0 half of the diamond");
    LegRow row;
    row.pt = pt;
    switch (leg) {
      case LegKind::Leg1: row.distance = pt.a + pt.b + 1.0; break;
      case LegKind::Leg2Minus: row.distance = -pt.b; break;
      case LegKind::PointOneZeroMinus: row.distance = std::hypot(1.0 - pt.a, pt.b); break;
    }
    row.values = diamond_periods(F, pt, opts);
    scan.rows.push_back(std::move(row));
  }
  if (scan.rows.size() < 2) {
    scan.claim = "needs at least two approach points";
    return scan;
  }

  auto monitored = [&](const LegRow& r) -> const IntegralValue& {
    switch (leg) {
      case LegKind::Leg1: return r.values.dy;
      case LegKind::Leg2Minus: return r.values.dz;
      case LegKind::PointOneZeroMinus: return r.values.cost_z;
    }
    return r.values.dy;
  };
  bool finite = true, monotone = true;
  for (std::size_t i = 0; i < scan.rows.size(); ++i) {
    const IntegralValue& v = monitored(scan.rows[i]);
    if (!v.finite()) finite = false;
    if (i == 0 || !finite) continue;
    const double prev = monitored(scan.rows[i - 1]).value;
    if (leg == LegKind::PointOneZeroMinus ? !(v.value > prev) : !(v.value < prev)) monotone = false;
  }
  scan.first = monitored(scan.rows.front()).value;
  scan.last = monitored(scan.rows.back()).value;
  switch (leg) {
    case LegKind::Leg1:
      scan.claim = "dy strictly decreasing with final dy < 0";
      scan.claim_holds = finite && monotone && scan.last < 0.0;
      break;
    case LegKind::Leg2Minus:
      scan.claim = "dz strictly decreasing with |dz| growing by the required factor";
      scan.claim_holds = finite && monotone && std::abs(scan.last) >= growth * std::abs(scan.first);
      break;
    case LegKind::PointOneZeroMinus:
      scan.claim = "cost_z strictly increasing by the required factor";
      scan.claim_holds = finite && monotone && scan.first > 0.0 && scan.last >= growth * scan.first;
      break;
  }
  return scan;
}

Inversion invert_at_infinity(const Polynomial& p, double y) {
  const auto deg = p.degree();
  if (!deg || *deg < 1) throw DomainError("invert_at_infinity: p must be nonconstant");
  const double an = p.leading();
  if (!(an > 0.0)) throw DomainError("invert_at_infinity: leading coefficient must be positive");
  if (!(y / an > 0.0)) throw DomainError("invert_at_infinity: y must be positive");
  const int n = *deg;
  const Polynomial q = p - y;
  const double R = fujiwara_bound(q) + 1.0;
  const auto roots = real_roots(q, -R, R);
  if (roots.empty()) throw NoSolutionError("invert_at_infinity: p(x) = y has no real solution");
  Inversion out;
  out.exact = roots.back().value;
  out.estimate = std::pow(y / an, 1.0 / n) - p.coeff(static_cast<std::size_t>(n - 1)) / (n * an);
  out.gap = std::abs(out.exact - out.estimate);
  return out;
}

}  // namespace jetgeo
