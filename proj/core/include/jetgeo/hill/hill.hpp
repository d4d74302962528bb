#pragma once

#include <string_view>
#include <vector>

#include "jetgeo/hill/roots.hpp"
#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

/// A closed interval [lo, hi] on which G^2 <= 1, with G(lo), G(hi) = +-1 and no interior
/// point where G^2 = 1.
struct HillInterval {
  double lo = 0.0;
  double hi = 0.0;
  /// G'(endpoint) = 0, i.e. the endpoint is a multiple root of 1 - G^2.
  bool lo_critical = false;
  bool hi_critical = false;
  double G_lo = 0.0;
  double G_hi = 0.0;
  int lo_multiplicity = 1;
  int hi_multiplicity = 1;
};

enum class GeodesicClass { Line, Periodic, Homoclinic, HeteroclinicDirect, HeteroclinicTurnback };

std::string_view to_string(GeodesicClass c);

struct HillOptions {
  RootOptions roots{};
  /// Half-width of the search window; 0 selects 2 + max(1, Fujiwara bounds of G - 1 and G + 1).
  double window = 0.0;
};

/// Components of {G^2 <= 1}, split at every interior point where G^2 = 1.
/// Throws DomainError for constant G and UnboundedHillError if a component reaches the
/// edge of the search window.
std::vector<HillInterval> hill_intervals(const Polynomial& G, const HillOptions& opts = {});

/// Geodesic type of the x-curve moving in I. Constant G gives Line.
GeodesicClass classify(const Polynomial& G, const HillInterval& I);

/// Smallest u > 0 with G(u) = sign for G = a + bF. Requires G(0)^2 < 1.
/// `window` bounds the search; 0 selects 1 + the Fujiwara bound of G - sign.
/// Throws NoSolutionError when G never reaches `sign` on (0, window].
double hill_endpoint_u(const Polynomial& F, PencilPoint pt, int sign, double window = 0.0,
                       const RootOptions& opts = {});

/// First positive point where G^2 = 1, with the value G takes there. With `skip_touching`
/// the even-multiplicity points, where G^2 touches 1 without leaving the Hill region, are
/// passed over so that u is the edge of the component containing 0.
struct FirstEndpoint {
  double u = 0.0;
  double G_u = 0.0;
  int multiplicity = 1;
};
FirstEndpoint first_positive_endpoint(const Polynomial& G, bool skip_touching = true, const RootOptions& opts = {});

}  // namespace jetgeo
