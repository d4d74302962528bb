#include "jetgeo/hill/hill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jetgeo/error.hpp"

namespace jetgeo {
namespace {

struct Crossing {
  double x;
  double G;
  int multiplicity;
};

std::vector<Crossing> crossings(const Polynomial& G, double lo, double hi, const RootOptions& opts) {
  std::vector<Crossing> out;
  for (double level : {-1.0, 1.0}) {
    for (const auto& r : real_roots(G - level, lo, hi, opts)) out.push_back({r.value, level, r.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
  return out;
}

double default_window(const Polynomial& G) {
  return 2.0 + std::max({1.0, fujiwara_bound(G - 1.0), fujiwara_bound(G + 1.0)});
}

}  // namespace

std::string_view to_string(GeodesicClass c) {
  switch (c) {
    case GeodesicClass::Line: return "Line";
    case GeodesicClass::Periodic: return "Periodic";
    case GeodesicClass::Homoclinic: return "Homoclinic";
    case GeodesicClass::HeteroclinicDirect: return "HeteroclinicDirect";
    case GeodesicClass::HeteroclinicTurnback: return "HeteroclinicTurnback";
  }
  return "?";
}

std::vector<HillInterval> hill_intervals(const Polynomial& G, const HillOptions& opts) {
  if (G.is_constant()) throw DomainError("hill_intervals: G is constant (a line geodesic)");
  const double R = opts.window > 0.0 ? opts.window : default_window(G);
  const auto cs = crossings(G, -R, R, opts.roots);

  auto inside = [&](double a, double b) { return std::abs(G(0.5 * (a + b))) < 1.0; };

  std::vector<HillInterval> out;
  if (cs.empty()) {
    if (std::abs(G(0.0)) < 1.0) throw UnboundedHillError("hill_intervals: |G| < 1 on the whole line");
    return out;
  }
  if (inside(-R, cs.front().x) || inside(cs.back().x, R))
    throw UnboundedHillError("hill_intervals: a Hill component reaches the search window edge");

  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    const Crossing& l = cs[i];
    const Crossing& r = cs[i + 1];
    if (!(r.x > l.x) || !inside(l.x, r.x)) continue;
    HillInterval I;
    I.lo = l.x;
    I.hi = r.x;
    I.G_lo = l.G;
    I.G_hi = r.G;
    I.lo_multiplicity = l.multiplicity;
    I.hi_multiplicity = r.multiplicity;
    I.lo_critical = l.multiplicity >= 2;
    I.hi_critical = r.multiplicity >= 2;
    out.push_back(I);
  }
  return out;
}

GeodesicClass classify(const Polynomial& G, const HillInterval& I) {
  if (G.is_constant()) return GeodesicClass::Line;
  const int critical = int(I.lo_critical) + int(I.hi_critical);
  if (critical == 0) return GeodesicClass::Periodic;
  if (critical == 1) return GeodesicClass::Homoclinic;
  return I.G_lo != I.G_hi ? GeodesicClass::HeteroclinicTurnback : GeodesicClass::HeteroclinicDirect;
}

double hill_endpoint_u(const Polynomial& F, PencilPoint pt, int sign, double window, const RootOptions& opts) {
  if (sign != 1 && sign != -1) throw DomainError("hill_endpoint_u: sign must be +1 or -1");
  const Polynomial G = pencil_member(F, pt);
  const double g0 = G(0.0);
  if (!(g0 * g0 < 1.0)) throw DomainError("hill_endpoint_u: requires G(0)^2 < 1");
  const Polynomial target = G - double(sign);
  if (target.is_constant()) throw NoSolutionError("hill_endpoint_u: G is constant");
  const double R = window > 0.0 ? window : fujiwara_bound(target) + 1.0;
  for (const auto& r : real_roots(target, 0.0, R, opts)) {
    if (r.value > 0.0) return r.value;
  }
  throw NoSolutionError("hill_endpoint_u: G never reaches the requested level on the search ray");
}

FirstEndpoint first_positive_endpoint(const Polynomial& G, bool skip_touching, const RootOptions& opts) {
  const double g0 = G(0.0);
  if (!(g0 * g0 < 1.0)) throw DomainError("first_positive_endpoint: requires G(0)^2 < 1");
  if (G.is_constant()) throw NoSolutionError("first_positive_endpoint: G is constant");
  const double R = default_window(G);
  for (const auto& c : crossings(G, 0.0, R, opts)) {
    if (c.x > 0.0 && !(skip_touching && c.multiplicity % 2 == 0)) return {c.x, c.G, c.multiplicity};
  }
  throw NoSolutionError("first_positive_endpoint: no crossing on the positive ray");
}

}  // namespace jetgeo
