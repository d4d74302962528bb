#include "jetgeo/quad/periods.hpp"

#include <cmath>

#include "jetgeo/error.hpp"
#include "jetgeo/poly/seagull.hpp"

namespace jetgeo {
namespace {

const double kSqrt3 = std::sqrt(3.0);

IntegralValue twice(const SingularIntegrand& f, double lo, double hi, const QuadOptions& opts) {
  return 2.0 * integrate_singular(f, lo, hi, opts);
}

}  // namespace

Periods periods(const Polynomial& F, PencilPoint pt, const HillInterval& I, const QuadOptions& opts) {
  const Polynomial G = pencil_member(F, pt);
  Periods out;
  out.dt = 2.0 * singular_integral(Polynomial::constant(1.0), G, I, opts);
  out.dy = 2.0 * singular_integral(G, G, I, opts);
  out.dz = 2.0 * singular_integral(G * F, G, I, opts);
  return out;
}

Periods half_periods(const Polynomial& F, const Periods& full, const HillInterval& I) {
  if (!F.is_even()) throw DomainError("half_periods: F is not even");
  const double scale = std::max({1.0, std::abs(I.lo), std::abs(I.hi)});
  if (std::abs(I.lo + I.hi) > 1e-9 * scale) throw DomainError("half_periods: Hill interval is not symmetric");
  return {0.5 * full.dt, 0.5 * full.dy, 0.5 * full.dz};
}

DiamondValues diamond_periods(const Polynomial& F, PencilPoint pt, const QuadOptions& opts) {
  if (!F.is_even()) throw DomainError("diamond_periods: F is not even");
  const Polynomial G = pencil_member(F, pt);
  const FirstEndpoint end = first_positive_endpoint(G);
  DiamondValues out;
  out.u = end.u;
  out.G_u = end.G_u;
  const Polynomial one = Polynomial::constant(1.0);
  const Factor minus{1.0 - G, -1}, plus{1.0 + G, -1};
  out.dt = twice({one, {minus, plus}}, 0.0, end.u, opts);
  out.dy = twice({G, {minus, plus}}, 0.0, end.u, opts);
  out.dz = twice({G * F, {minus, plus}}, 0.0, end.u, opts);
  out.cost_y = twice({one, {{1.0 - G, 1}, plus}}, 0.0, end.u, opts);
  out.cost_z = twice({1.0 - G * F, {minus, plus}}, 0.0, end.u, opts);
  return out;
}

CostPair cost_functions(const Polynomial& F, PencilPoint pt, const QuadOptions& opts) {
  const DiamondValues v = diamond_periods(F, pt, opts);
  return {v.cost_y, v.cost_z};
}

HeteroclinicCosts heteroclinic_costs(const Polynomial& F, double delta, const QuadOptions& opts) {
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("heteroclinic_costs: delta must lie in [0, 1)");
  HeteroclinicCosts out;
  out.delta = delta;
  const Polynomial one = Polynomial::constant(1.0);
  const Factor minus{1.0 - F, -1}, plus{1.0 + F, -1};
  out.T = twice({one, {minus, plus}}, 0.0, delta, opts);
  out.dy0 = twice({F, {minus, plus}}, 0.0, delta, opts);
  out.dz0 = twice({F * F, {minus, plus}}, 0.0, delta, opts);
  out.cost_y = twice({one, {{1.0 - F, 1}, plus}}, 0.0, delta, opts);
  out.cost_z = twice({one, {{1.0 - F, 1}, {1.0 + F, 1}}}, 0.0, delta, opts);
  return out;
}

Cost0Limit cost0_limit(const Polynomial& F, const QuadOptions& opts) {
  Cost0Limit out;
  const Polynomial dF = F.derivative();
  out.double_root_endpoint = std::abs(F(1.0) - 1.0) <= 1e-9 * std::max(1.0, F.abs_eval(1.0)) &&
                             std::abs(dF(1.0)) <= 1e-9 * std::max(1.0, dF.abs_eval(1.0));
  if (!out.double_root_endpoint) {
    out.cost_y = IntegralValue::divergent(1, "F(1) = 1 with F'(1) = 0 does not hold");
    out.cost_z = out.cost_y;
    return out;
  }
  const Polynomial one = Polynomial::constant(1.0);
  out.cost_y = twice({one, {{1.0 - F, 1}, {1.0 + F, -1}}}, 0.0, 1.0, opts);
  out.cost_z = twice({one, {{1.0 - F, 1}, {1.0 + F, 1}}}, 0.0, 1.0, opts);
  return out;
}

double outer_endpoint_beta(const Polynomial& F) { return hill_endpoint_u(F, PencilPoint{0.0, 1.0}, -1); }

IntegralValue cost_bdry(const Polynomial& F, double u, const QuadOptions& opts) {
  const double beta = outer_endpoint_beta(F);
  if (u < beta * (1.0 - 1e-12)) throw DomainError("cost_bdry: u lies below the outer endpoint beta");
  const double Fu = F(u);
  return twice({Polynomial::constant(1.0), {{1.0 - F, 1}, {F - Fu, -1}}}, 0.0, u, opts);
}

double leg3_mu(const Polynomial& F, double u) {
  const double Fu = F(u);
  return (-1.0 - Fu) / (1.0 - Fu);
}

IntegralValue lowbound(double u, const QuadOptions& opts) {
  if (u < kSqrt3 * (1.0 - 1e-12)) throw DomainError("lowbound: u must be at least sqrt 3");
  static const Polynomial F0 = seagull_F0();
  static const Polynomial F1 = seagull_F1();
  const Polynomial denom = F0 - F0(u);
  const Polynomial one = Polynomial::constant(1.0);
  const double split = std::min(kSqrt3, u);
  IntegralValue v = twice({one, {{1.0 - F0, 1}, {denom, -1}}}, 0.0, split, opts);
  if (u > split) v = v + twice({one, {{1.0 - F1, 1}, {denom, -1}}}, split, u, opts);
  return v;
}

}  // namespace jetgeo
