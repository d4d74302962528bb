#include "jetgeo/poly/seagull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "jetgeo/error.hpp"
#include "jetgeo/hill/roots.hpp"

namespace jetgeo {
namespace {

const double kSqrt3 = std::sqrt(3.0);

Polynomial double_well() { return Polynomial{1.0, 0.0, -2.0, 0.0, 1.0}; }

// Zeroes coefficients below rel * scale so that exact-but-rounded cancellations vanish.
Polynomial clean(const Polynomial& p, double scale, double rel) {
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  for (double& ci : c)
    if (std::abs(ci) <= rel * scale) ci = 0.0;
  return Polynomial(std::move(c));
}

// Looks for a point of [start, inf) where D < -slack; returns it if found.
std::optional<double> tail_negative(const Polynomial& D, double start, double slack) {
  if (D.is_zero()) return std::nullopt;
  if (D.is_constant()) {
    if (D(0.0) < -slack) return start;
    return std::nullopt;
  }
  const double end = std::max(start, fujiwara_bound(D)) + 1.0;
  std::vector<double> probes{start, end};
  double prev = start;
  for (const auto& r : real_roots(D, start, end)) {
    probes.push_back(0.5 * (prev + r.value));
    prev = r.value;
  }
  probes.push_back(0.5 * (prev + end));
  for (double x : probes)
    if (D(x) < -slack * std::max(1.0, D.abs_eval(x))) return x;
  if (D.leading() < 0.0) return end;
  return std::nullopt;
}

std::string fmt_point(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

Polynomial scaled_power(int n) {
  if (n < 0) throw DomainError("scaled_power: negative power");
  return Polynomial::monomial(n, std::pow(3.0, -0.5 * n));
}

Polynomial specific_seagull_polynomial(const Polynomial& P) {
  const Polynomial W = (1.0 + P + scaled_power(14)) * (1.0 / 6.0);
  return 1.0 - double_well() * W;
}

Polynomial seagull_F0() { return specific_seagull_polynomial(scaled_power(14)); }
Polynomial seagull_F1() { return specific_seagull_polynomial(Polynomial::constant(1.0)); }

std::string to_string(SpecificClassCondition c) {
  switch (c) {
    case SpecificClassCondition::None: return "none";
    case SpecificClassCondition::Degree: return "degree(P) <= 14";
    case SpecificClassCondition::PeakNormalization: return "P(sqrt3) = 1";
    case SpecificClassCondition::InnerBand: return "inner band: (x/sqrt3)^14 <= |P| <= 1 on |x| <= sqrt3";
    case SpecificClassCondition::OuterBand: return "outer band: 1 <= P <= (x/sqrt3)^14 on |x| >= sqrt3";
    case SpecificClassCondition::OuterSlope: return "outer slope: |P'| <= (14/sqrt3)|x/sqrt3|^13 on |x| >= sqrt3";
  }
  return "?";
}

SpecificClassCheck check_specific_class(const Polynomial& P, const SpecificClassOptions& opts) {
  SpecificClassCheck res;
  auto fail = [&](SpecificClassCondition c, double x, const std::string& what) {
    res.failed = c;
    res.witness = x;
    res.detail = to_string(c) + " fails at x = " + fmt_point(x) + (what.empty() ? "" : ": " + what);
    return res;
  };

  if (P.degree().value_or(0) > 14) return fail(SpecificClassCondition::Degree, 0.0, "");
  const double tol = opts.rel_tol;
  if (std::abs(P(kSqrt3) - 1.0) > tol) return fail(SpecificClassCondition::PeakNormalization, kSqrt3, "");

  const Polynomial dP = P.derivative();
  const int n = std::max(opts.grid_points, 2);
  for (int i = 0; i < n; ++i) {
    const double x = -opts.grid_half_width + 2.0 * opts.grid_half_width * i / (n - 1);
    const double r = std::abs(x) / kSqrt3;
    const double s14 = std::pow(r, 14);
    const double p = P(x);
    if (std::abs(x) <= kSqrt3) {
      if (std::abs(p) < s14 - tol || std::abs(p) > 1.0 + tol)
        return fail(SpecificClassCondition::InnerBand, x, "P = " + fmt_point(p));
    } else {
      if (p < 1.0 - tol || p > s14 * (1.0 + tol) + tol)
        return fail(SpecificClassCondition::OuterBand, x, "P = " + fmt_point(p));
      const double bound = 14.0 / kSqrt3 * std::pow(r, 13);
      if (std::abs(dP(x)) > bound * (1.0 + tol) + tol)
        return fail(SpecificClassCondition::OuterSlope, x, "|P'| = " + fmt_point(std::abs(dP(x))));
    }
  }

  // Tails beyond the grid, in both directions.
  const Polynomial s14 = scaled_power(14);
  const Polynomial ds14 = s14.derivative();
  const double start = std::max(opts.grid_half_width, kSqrt3);
  for (double dir : {1.0, -1.0}) {
    const Polynomial Pd = scale_argument(P, dir);
    const Polynomial dPd = scale_argument(dP, dir) * dir;  // d/dx P evaluated at dir*x, times dir
    const Polynomial dsd = scale_argument(ds14, dir) * dir;
    const double scale = std::max({1.0, P.max_abs_coeff(), s14.max_abs_coeff()});
    struct Tail {
      Polynomial D;
      SpecificClassCondition cond;
    };
    const Tail tails[] = {
        {clean(Pd - 1.0, scale, 1e-12), SpecificClassCondition::OuterBand},
        {clean(scale_argument(s14, dir) - Pd, scale, 1e-12), SpecificClassCondition::OuterBand},
        {clean(dsd - dPd, scale, 1e-12), SpecificClassCondition::OuterSlope},
        {clean(dsd + dPd, scale, 1e-12), SpecificClassCondition::OuterSlope},
    };
    for (const auto& t : tails) {
      if (auto x = tail_negative(t.D, start, tol)) return fail(t.cond, dir * *x, "tail");
    }
  }
  return res;
}

Polynomial build_specific_seagull(const Polynomial& P, const SpecificClassOptions& opts) {
  const auto check = check_specific_class(P, opts);
  if (!check.ok()) throw DomainError("build_specific_seagull: " + check.detail);
  return specific_seagull_polynomial(P);
}

std::optional<Polynomial> recover_seagull_P(const Polynomial& F, double rel_tol) {
  const Polynomial num = 1.0 - F;
  const auto [W, rem] = divide(num, double_well());
  if (rem.max_abs_coeff() > rel_tol * std::max(1.0, num.max_abs_coeff())) return std::nullopt;
  return clean(6.0 * W - 1.0 - scaled_power(14), std::max(1.0, W.max_abs_coeff()), 1e-13);
}

SeagullReport is_seagull(const Polynomial& F, double tol) {
  if (F.is_constant()) throw DomainError("is_seagull: F is constant");
  SeagullReport rep;
  rep.is_even = F.is_even();
  if (!rep.is_even) rep.failures.push_back("not even");
  rep.interior_value_F0 = F(0.0);
  if (!(rep.interior_value_F0 > 0.0 && rep.interior_value_F0 < 1.0)) rep.failures.push_back("F(0) not in (0, 1)");

  const Polynomial dF = F.derivative();
  if (!dF.is_constant()) {
    const double R = fujiwara_bound(dF) + 1.0;
    for (const auto& r : real_roots(dF, -R, R)) rep.critical_points.push_back(r.value);
  }

  const bool bounded_above = F.degree().value() % 2 == 0 && F.leading() < 0.0;
  if (!bounded_above) {
    rep.max_value = std::numeric_limits<double>::infinity();
    rep.failures.push_back("maximum unbounded");
  } else {
    rep.max_value = -std::numeric_limits<double>::infinity();
    for (double c : rep.critical_points) {
      const double v = F(c);
      if (v > rep.max_value || (v == rep.max_value && c > rep.a_peak)) {
        rep.max_value = v;
        rep.a_peak = std::abs(c);
      }
    }
    if (std::abs(rep.max_value - 1.0) > tol) rep.failures.push_back("maximum value is not 1");
  }

  const auto& cp = rep.critical_points;
  const double a = rep.a_peak;
  const bool shape = cp.size() == 3 && a > tol && std::abs(cp[1]) <= tol && std::abs(cp[0] + a) <= tol * std::max(1.0, a) &&
                     std::abs(cp[2] - a) <= tol * std::max(1.0, a);
  if (!shape) rep.failures.push_back("critical points are not exactly {0, +-a}");
  rep.passes = rep.failures.empty();
  return rep;
}

}  // namespace jetgeo
