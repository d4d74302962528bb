#pragma once

#include <string>
#include <vector>

#include "jetgeo/hill/hill.hpp"
#include "jetgeo/poly/polynomial.hpp"
#include "jetgeo/quad/gauss_kronrod.hpp"

namespace jetgeo {

enum class IntegralStatus { Finite, Divergent, Failed };

/// Result of a possibly singular integral. Divergence is an ordinary outcome carrying the
/// direction (+1 or -1) of the blow-up; Failed means the quadrature budget ran out or the
/// integrand left its domain.
struct IntegralValue {
  double value = 0.0;
  double error = 0.0;
  IntegralStatus status = IntegralStatus::Finite;
  int direction = 0;
  std::string note;

  bool finite() const { return status == IntegralStatus::Finite; }
  static IntegralValue divergent(int direction, std::string note = {});
  static IntegralValue failed(std::string note);
};

IntegralValue operator+(const IntegralValue& a, const IntegralValue& b);
IntegralValue operator-(const IntegralValue& a);
IntegralValue operator*(double k, const IntegralValue& a);

/// One factor p(x)^{half_power/2} of an integrand; half_power is +1 or -1.
struct Factor {
  Polynomial p;
  int half_power = -1;
};

/// N(x) * prod_j p_j(x)^{h_j/2}. Every p_j must be nonnegative on the integration range.
struct SingularIntegrand {
  Polynomial numerator;
  std::vector<Factor> factors;
};

/// Integrates over [lo, hi]. The range is cut at interior roots of the factors and each
/// piece at its midpoint. At every cut the local order s^{K/2} of the integrand is read off
/// the Taylor-shifted factors; K <= -2 means divergence, odd K is regularized by s = t^2,
/// and the remaining smooth integrand goes to adaptive Gauss-Kronrod.
IntegralValue integrate_singular(const SingularIntegrand& f, double lo, double hi, const QuadOptions& opts = {});

/// The integral of N / sqrt(1 - G^2) over the Hill interval I.
IntegralValue singular_integral(const Polynomial& N, const Polynomial& G, const HillInterval& I,
                                const QuadOptions& opts = {});

}  // namespace jetgeo
