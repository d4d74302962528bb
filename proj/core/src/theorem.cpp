#include "jetgeo/verify/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "jetgeo/error.hpp"
#include "jetgeo/quad/periods.hpp"

namespace jetgeo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kSqrt3 = std::sqrt(3.0);

std::string num(double v, int prec = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

std::string fixed(double v, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string describe(const IntegralValue& v) {
  switch (v.status) {
    case IntegralStatus::Finite: return num(v.value);
    case IntegralStatus::Divergent: return v.direction > 0 ? "+inf (divergent)" : "-inf (divergent)";
    case IntegralStatus::Failed: return "failed: " + v.note;
  }
  return "?";
}

double value_or_nan(const IntegralValue& v) {
  if (v.finite()) return v.value;
  if (v.status == IntegralStatus::Divergent) return v.direction * std::numeric_limits<double>::infinity();
  return kNaN;
}

void add(CheckResult& c, std::string key, std::string value) { c.evidence.emplace_back(std::move(key), std::move(value)); }

// Runs body; a library exception turns the check inconclusive instead of aborting the report.
CheckResult guarded(std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult c;
  c.name = std::move(name);
  try {
    body(c);
  } catch (const Error& e) {
    c.passed = false;
    c.inconclusive = true;
    add(c, "error", e.what());
  }
  return c;
}

std::vector<double> even_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
  return g;
}

// Pointwise lower <= F <= upper on the grid, slack relative to the polynomial scale.
void band_check(CheckResult& c, const Polynomial& F, const Polynomial& lower, const Polynomial& upper,
                const std::vector<double>& xs, double rel_tol) {
  double worst_lo = INFINITY, worst_hi = INFINITY, x_lo = 0, x_hi = 0;
  bool ok = true;
  for (double x : xs) {
    const double f = F(x);
    const double scale = std::max({1.0, F.abs_eval(x), lower.abs_eval(x), upper.abs_eval(x)});
    const double dl = f - lower(x), du = upper(x) - f;
    if (dl < worst_lo) worst_lo = dl, x_lo = x;
    if (du < worst_hi) worst_hi = du, x_hi = x;
    if (dl < -rel_tol * scale || du < -rel_tol * scale) ok = false;
  }
  add(c, "min(F - lower)", num(worst_lo));
  add(c, "argmin x (lower)", num(x_lo));
  add(c, "min(upper - F)", num(worst_hi));
  add(c, "argmin x (upper)", num(x_hi));
  c.passed = ok;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const CheckResult* MinimalityReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<double> verify_u_grid(const Polynomial& F, const VerifyConfig& cfg) {
  if (cfg.u_points < 3) throw DomainError("verify: u grid needs at least three points");
  const double lo = outer_endpoint_beta(F) + cfg.u_offset;
  if (!(cfg.u_max > lo)) throw DomainError("verify: u_max must exceed beta + u_offset");
  std::vector<double> g;
  for (int i = 0; i < cfg.u_points; ++i)
    g.push_back(i + 1 == cfg.u_points ? cfg.u_max : lo * std::pow(cfg.u_max / lo, static_cast<double>(i) / (cfg.u_points - 1)));
  return g;
}

MinimalityReport verify_theorem_main(const Polynomial& F, const VerifyConfig& cfg) {
  MinimalityReport rep;
  rep.F = F;
  const QuadOptions& q = cfg.quad;

  // Class membership.
  const SeagullReport shape = is_seagull(F);
  CheckResult c_shape;
  c_shape.name = "seagull_shape";
  c_shape.passed = shape.passes;
  c_shape.grid = "critical points of F'";
  add(c_shape, "even", shape.is_even ? "yes" : "no");
  add(c_shape, "max F", num(shape.max_value));
  add(c_shape, "F(0)", num(shape.interior_value_F0));
  add(c_shape, "peak a", num(shape.a_peak));
  add(c_shape, "critical points", std::to_string(shape.critical_points.size()));
  for (const auto& f : shape.failures) add(c_shape, "failure", f);
  rep.checks.push_back(c_shape);

  CheckResult c_class;
  c_class.name = "specific_class";
  c_class.grid = std::to_string(cfg.class_opts.grid_points) + " points on |x| <= " + num(cfg.class_opts.grid_half_width) +
                 ", tails by sign past the last root";
  rep.P = recover_seagull_P(F);
  if (!rep.P) {
    add(c_class, "failure", "(x^2 - 1)^2 does not divide 1 - F");
  } else {
    add(c_class, "P", to_text(*rep.P));
    const SpecificClassCheck chk = check_specific_class(*rep.P, cfg.class_opts);
    c_class.passed = chk.ok();
    add(c_class, "condition", to_string(chk.failed));
    if (!chk.ok()) {
      add(c_class, "witness x", num(chk.witness));
      add(c_class, "detail", chk.detail);
    }
  }
  rep.checks.push_back(c_class);
  rep.in_class = c_shape.passed && c_class.passed;
  if (!rep.in_class) {
    if (!cfg.override_class) {
      std::string why = c_shape.passed ? "" : "not a seagull";
      for (const auto& [k, v] : c_class.evidence)
        if (k == "failure" || k == "detail") why += (why.empty() ? "" : "; ") + v;
      throw DomainError("verify: F lies outside the specific class (" + why + ")");
    }
    rep.notes.push_back("F lies outside the certified class; the remaining checks are diagnostic only");
  }

  // Limit of the heteroclinic cost against the extreme member F1.
  rep.checks.push_back(guarded("cost0_limit", [&](CheckResult& c) {
    c.grid = "adaptive quadrature on [0, 1], abs tol " + num(q.abs_tol);
    const Cost0Limit mine = cost0_limit(F, q);
    const Cost0Limit ref = cost0_limit(seagull_F1(), q);
    add(c, "double root at x = 1", mine.double_root_endpoint ? "yes" : "no");
    add(c, "cost0_limit(F)", mine.cost_y.finite() ? fixed(mine.cost_y.value) : describe(mine.cost_y));
    add(c, "cost0_limit(F1)", ref.cost_y.finite() ? fixed(ref.cost_y.value) : describe(ref.cost_y));
    add(c, "threshold", num(cfg.threshold));
    if (mine.cost_y.status == IntegralStatus::Failed || ref.cost_y.status == IntegralStatus::Failed) {
      c.inconclusive = true;
      return;
    }
    c.passed = mine.cost_y.finite() && ref.cost_y.finite() && ref.cost_y.value < cfg.threshold &&
               mine.cost_y.value <= ref.cost_y.value + 10.0 * q.abs_tol;
  }));

  // Lower bound and boundary cost on the u grid.
  std::vector<double> ugrid;
  std::vector<double> lb;
  rep.checks.push_back(guarded("lowbound_grid", [&](CheckResult& c) {
    ugrid = verify_u_grid(F, cfg);
    c.grid = std::to_string(ugrid.size()) + " log-spaced u in [" + num(ugrid.front()) + ", " + num(ugrid.back()) + "]";
    bool failed_quad = false;
    for (double u : ugrid) {
      const IntegralValue v = lowbound(u, q);
      if (v.status == IntegralStatus::Failed) failed_quad = true;
      lb.push_back(value_or_nan(v));
    }
    SideTable t{"lowbound", {"u", "lowbound", "margin", "second_difference"}, {}};
    double min_margin = INFINITY, u_min = 0.0, min_d2 = INFINITY;
    bool positive = true;
    for (std::size_t i = 0; i < ugrid.size(); ++i) {
      const double m = lb[i] - cfg.threshold;
      if (!(m > 0.0)) positive = false;
      if (m < min_margin) min_margin = m, u_min = ugrid[i];
      double d2 = kNaN;
      if (i > 0 && i + 1 < ugrid.size()) {
        d2 = lb[i - 1] - 2.0 * lb[i] + lb[i + 1];
        min_d2 = std::min(min_d2, d2);
      }
      t.rows.push_back({ugrid[i], lb[i], m, d2});
    }
    rep.tables.push_back(std::move(t));
    add(c, "min(lowbound - threshold)", num(min_margin));
    add(c, "at u", num(u_min));
    add(c, "min second difference", num(min_d2));
    add(c, "slack", num(cfg.convexity_slack));
    if (failed_quad) {
      c.inconclusive = true;
      return;
    }
    c.passed = positive && min_d2 >= -cfg.convexity_slack;
  }));

  rep.checks.push_back(guarded("cost_bdry_bound", [&](CheckResult& c) {
    if (ugrid.empty() || lb.size() != ugrid.size()) throw ConvergenceError("lower bound grid unavailable");
    c.grid = "the lowbound u grid";
    SideTable t{"cost_bdry", {"u", "cost_bdry", "lowbound", "gap"}, {}};
    bool ok = true, failed_quad = false;
    double min_gap = INFINITY, min_cb = INFINITY;
    for (std::size_t i = 0; i < ugrid.size(); ++i) {
      const IntegralValue cb = cost_bdry(F, ugrid[i], q);
      if (cb.status == IntegralStatus::Failed) failed_quad = true;
      const double v = value_or_nan(cb);
      const double gap = v - lb[i];
      if (!(gap >= -10.0 * q.abs_tol) || !(v > cfg.threshold)) ok = false;
      min_gap = std::min(min_gap, gap);
      min_cb = std::min(min_cb, v);
      t.rows.push_back({ugrid[i], v, lb[i], gap});
    }
    rep.tables.push_back(std::move(t));
    add(c, "min(cost_bdry - lowbound)", num(min_gap));
    add(c, "min cost_bdry", num(min_cb));
    if (failed_quad) {
      c.inconclusive = true;
      return;
    }
    c.passed = ok;
  }));

  // Pointwise comparison with the extreme members.
  static const Polynomial F0 = seagull_F0();
  static const Polynomial F1 = seagull_F1();
  const int ns = std::max(3, cfg.sandwich_points);
  rep.checks.push_back(guarded("sandwich_inner", [&](CheckResult& c) {
    c.grid = std::to_string(ns) + " points on [-sqrt3, sqrt3]";
    const auto xs = even_grid(-kSqrt3, kSqrt3, ns);
    band_check(c, F, F1, F0, xs, cfg.class_opts.rel_tol);
    // The cost integrand inherits the order on [-1, 1].
    auto r = [](double f) { return std::sqrt(std::max(0.0, 1.0 - f) / (1.0 + f)); };
    double worst = INFINITY;
    for (double x : even_grid(-1.0, 1.0, ns)) {
      const double a = r(F0(x)), b = r(F(x)), d = r(F1(x));
      worst = std::min({worst, b - a, d - b});
    }
    add(c, "min cost integrand margin on [-1, 1]", num(worst));
    if (!(worst >= -1e-6)) c.passed = false;
  }));
  rep.checks.push_back(guarded("sandwich_outer", [&](CheckResult& c) {
    c.grid = std::to_string(ns) + " points on sqrt3 <= |x| <= " + num(cfg.sandwich_outer_max);
    auto xs = even_grid(kSqrt3, cfg.sandwich_outer_max, ns);
    for (double x : even_grid(kSqrt3, cfg.sandwich_outer_max, ns)) xs.push_back(-x);
    band_check(c, F, F0, F1, xs, cfg.class_opts.rel_tol);
  }));

  // Cost_y along Plus tau-lines.
  rep.checks.push_back(guarded("cost_monotonicity", [&](CheckResult& c) {
    if (ugrid.empty()) ugrid = verify_u_grid(F, cfg);
    const int m = std::min<int>(cfg.tau_lines, static_cast<int>(ugrid.size()));
    c.grid = std::to_string(m) + " tau-lines from the u grid, " + std::to_string(cfg.tau_points) + " tau each, " +
             std::to_string(cfg.certificate_points) + " certificate samples per tau";
    SideTable t{"cost_monotonicity", {"u", "tau", "cost_y", "difference"}, {}};
    bool ok = true, failed_quad = false;
    double max_diff = -INFINITY, max_cert = -INFINITY;
    for (int i = 0; i < m; ++i) {
      const std::size_t idx =
          m == 1 ? 0 : static_cast<std::size_t>(std::lround(static_cast<double>(i) * (ugrid.size() - 1) / (m - 1)));
      const double u = ugrid[idx];
      const MonotonicityScan s = cost_monotonicity_scan(F, u, default_tau_grid(F, u, cfg.tau_points), q, cfg.certificate_points);
      for (const auto& v : s.cost_y)
        if (v.status == IntegralStatus::Failed) failed_quad = true;
      if (!s.all_negative || !s.certificate_nonpositive) ok = false;
      for (std::size_t j = 0; j < s.tau.size(); ++j) {
        const double d = j + 1 < s.tau.size() ? s.differences[j] : kNaN;
        if (j + 1 < s.tau.size()) max_diff = std::max(max_diff, d);
        t.rows.push_back({u, s.tau[j], value_or_nan(s.cost_y[j]), d});
      }
      max_cert = std::max(max_cert, s.certificate_max);
    }
    rep.tables.push_back(std::move(t));
    add(c, "max finite difference", num(max_diff));
    add(c, "max certificate integrand", num(max_cert));
    if (failed_quad) {
      c.inconclusive = true;
      return;
    }
    c.passed = ok;
  }));

  // Divergence trends near the legs.
  const std::pair<LegKind, const char*> legs[] = {
      {LegKind::Leg1, "leg1"}, {LegKind::Leg2Minus, "leg2_minus"}, {LegKind::PointOneZeroMinus, "point10_minus"}};
  for (const auto& [kind, name] : legs) {
    rep.checks.push_back(guarded(name, [&, kind = kind, name = name](CheckResult& c) {
      const auto approach = default_leg_approach(F, kind, cfg.legs);
      c.grid = std::to_string(approach.size()) + " points, distance " + num(cfg.legs.start_distance) + " halving";
      const LegScan s = leg_divergence_scan(F, kind, approach, q, cfg.legs.growth);
      SideTable t{name, {"a", "b", "distance", "u", "dt", "dy", "dz", "cost_y", "cost_z"}, {}};
      bool failed_quad = false;
      for (const auto& r : s.rows) {
        const auto& v = r.values;
        for (const auto* iv : {&v.dt, &v.dy, &v.dz, &v.cost_y, &v.cost_z})
          if (iv->status == IntegralStatus::Failed) failed_quad = true;
        t.rows.push_back({r.pt.a, r.pt.b, r.distance, v.u, value_or_nan(v.dt), value_or_nan(v.dy), value_or_nan(v.dz),
                          value_or_nan(v.cost_y), value_or_nan(v.cost_z)});
      }
      rep.tables.push_back(std::move(t));
      add(c, "claim", s.claim);
      add(c, "first", num(s.first));
      add(c, "last", num(s.last));
      add(c, "growth factor", num(s.first != 0.0 ? std::abs(s.last / s.first) : kNaN));
      if (failed_quad) {
        c.inconclusive = true;
        return;
      }
      c.passed = s.claim_holds;
    }));
  }

  bool any_fail = false, any_inconclusive = false;
  for (const auto& c : rep.checks) {
    if (c.inconclusive) any_inconclusive = true;
    else if (!c.passed) any_fail = true;
  }
  rep.verdict = any_fail ? Verdict::Fail : any_inconclusive ? Verdict::Inconclusive : Verdict::Pass;
  try {
    rep.notes.push_back("beta = " + num(outer_endpoint_beta(F)) + " (first positive root of F + 1)");
  } catch (const Error&) {
    rep.notes.push_back("F never reaches -1 for x > 0");
  }
  rep.notes.push_back("asymptotic inversion uses the correction -a_{n-1}/(n a_n)");
  return rep;
}

}  // namespace jetgeo
