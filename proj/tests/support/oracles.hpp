#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// quadrature, root finding or integrators under test.

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "jetgeo/poly/polynomial.hpp"

namespace oracle {

inline const double kPi = std::acos(-1.0);
inline const double kSqrt3 = std::sqrt(3.0);

// sum c_i x^i with explicit powers.
inline double power_sum(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * std::pow(x, static_cast<double>(i));
  return s;
}

inline std::vector<double> coeffs(const jetgeo::Polynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

// The two extreme members written out from their closed forms.
inline double F0(double x) {
  const double s = (x * x - 1.0) * (x * x - 1.0);
  return 1.0 - s / 6.0 * (1.0 + 2.0 * std::pow(x / kSqrt3, 14));
}
inline double F1(double x) {
  const double s = (x * x - 1.0) * (x * x - 1.0);
  return 1.0 - s / 6.0 * (2.0 + std::pow(x / kSqrt3, 14));
}

// Tanh-sinh quadrature; handles integrable endpoint singularities.
template <class F>
double tanh_sinh(F f, double a, double b, double tol = 1e-13) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, a, b, tol);
}

// Simple roots of f on [lo, hi] from sign changes on an n-point grid, refined by bisection.
inline std::vector<double> sign_change_roots(const std::function<double(double)>& f, double lo, double hi, int n) {
  std::vector<double> out;
  double xa = lo, fa = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double xb = lo + (hi - lo) * i / n;
    const double fb = f(xb);
    if (fa == 0.0) {
      out.push_back(xa);
    } else if (fa * fb < 0.0) {
      double a = xa, b = xb, va = fa;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double vm = f(m);
        if ((vm < 0) == (va < 0)) a = m, va = vm;
        else b = m;
      }
      out.push_back(0.5 * (a + b));
    }
    xa = xb;
    fa = fb;
  }
  return out;
}

inline std::pair<double, double> quadratic_roots(double a, double b, double c) {
  const double d = std::sqrt(b * b - 4 * a * c);
  const double q = -0.5 * (b + std::copysign(d, b));
  const double r1 = q / a, r2 = c / q;
  return {std::min(r1, r2), std::max(r1, r2)};
}

inline jetgeo::Polynomial random_poly(std::mt19937_64& rng, int degree, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = d(rng);
  if (c.back() == 0.0) c.back() = scale;
  return jetgeo::Polynomial(c);
}

}  // namespace oracle
