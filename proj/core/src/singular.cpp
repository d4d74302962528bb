#include "jetgeo/quad/singular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jetgeo/error.hpp"
#include "jetgeo/hill/roots.hpp"

namespace jetgeo {
namespace {

constexpr double kZeroRel = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

// r(s) = p(e + sigma s) / s^order, where order counts the vanishing Taylor coefficients
// at e. Near e the reduced Taylor form is evaluated; further out the plain polynomial is,
// whichever has the smaller rounding bound.
struct LocalForm {
  Polynomial p, abs_p;
  Polynomial reduced, reduced_scale;
  double e = 0.0, sigma = 1.0;
  int order = 0;
  bool vanishes = false;  // every coefficient is rounding noise

  double operator()(double s) const {
    if (s <= 0.0) return reduced.coeff(0);
    const double x = e + sigma * s;
    const double sm = std::pow(s, order);
    const double err_direct = abs_p(std::abs(x)) / sm;
    const double err_taylor = reduced_scale(s);
    return err_taylor <= err_direct ? reduced(s) : p(x) / sm;
  }
  double abs_eval(double s) const { return reduced_scale(s); }
};

LocalForm local_form(const Polynomial& p, double e, double sigma) {
  LocalForm out;
  out.p = p;
  out.e = e;
  out.sigma = sigma;
  std::vector<double> abs_c;
  for (double c : p.coeffs()) abs_c.push_back(std::abs(c));
  out.abs_p = Polynomial(abs_c);
  const Polynomial q = scale_argument(p.shifted(e), sigma);
  const Polynomial scale = out.abs_p.shifted(std::abs(e));
  const auto d = q.coeffs();
  std::size_t m = 0;
  while (m < d.size() && std::abs(d[m]) <= kZeroRel * scale.coeff(m)) ++m;
  if (m == d.size()) {
    out.vanishes = true;
    return out;
  }
  out.order = static_cast<int>(m);
  out.reduced = Polynomial(std::vector<double>(d.begin() + static_cast<std::ptrdiff_t>(m), d.end()));
  const auto sc = scale.coeffs();
  out.reduced_scale = Polynomial(std::vector<double>(sc.begin() + static_cast<std::ptrdiff_t>(m), sc.end()));
  return out;
}

// Integral of f over the half-piece that starts at e and runs a distance len in direction sigma.
IntegralValue half_piece(const SingularIntegrand& f, double e, double sigma, double len, const QuadOptions& opts) {
  const LocalForm num = local_form(f.numerator, e, sigma);
  if (num.vanishes) return {};
  std::vector<LocalForm> facs;
  std::vector<int> powers;
  int K = 2 * num.order;
  for (const auto& fac : f.factors) {
    LocalForm lf = local_form(fac.p, e, sigma);
    if (lf.vanishes) return IntegralValue::failed("integrand factor vanishes identically");
    if (lf.reduced.coeff(0) < 0.0) return IntegralValue::failed("integrand factor negative on the range");
    K += lf.order * fac.half_power;
    facs.push_back(std::move(lf));
    powers.push_back(fac.half_power);
  }
  if (K <= -2) {
    const int dir = num.reduced.coeff(0) > 0.0 ? 1 : -1;
    return IntegralValue::divergent(dir, "non-integrable endpoint singularity");
  }

  bool left_domain = false;
  auto R = [&](double s) {
    double v = num(s);
    for (std::size_t j = 0; j < facs.size(); ++j) {
      double pj = facs[j](s);
      if (pj < 0.0) {
        if (powers[j] > 0 && pj > -1e-14 * facs[j].abs_eval(s)) {
          pj = 0.0;
        } else {
          left_domain = true;
          return 0.0;
        }
      }
      v *= powers[j] > 0 ? std::sqrt(pj) : 1.0 / std::sqrt(pj);
    }
    return v;
  };

  GKResult r;
  if (K % 2 != 0) {
    const int p = K + 1;  // even, >= 0
    r = integrate_gk([&](double t) { return 2.0 * std::pow(t, p) * R(t * t); }, 0.0, std::sqrt(len), opts);
  } else {
    const int p = K / 2;
    r = integrate_gk([&](double s) { return (p == 0 ? 1.0 : std::pow(s, p)) * R(s); }, 0.0, len, opts);
  }
  if (left_domain) return IntegralValue::failed("integrand factor negative on the range");
  IntegralValue out{r.value, r.error, IntegralStatus::Finite, 0, {}};
  if (!r.converged) {
    out.status = IntegralStatus::Failed;
    out.note = "quadrature budget exhausted";
  }
  return out;
}

}  // namespace

IntegralValue IntegralValue::divergent(int direction, std::string note) {
  return {direction >= 0 ? kInf : -kInf, 0.0, IntegralStatus::Divergent, direction >= 0 ? 1 : -1, std::move(note)};
}

IntegralValue IntegralValue::failed(std::string note) {
  return {std::numeric_limits<double>::quiet_NaN(), kInf, IntegralStatus::Failed, 0, std::move(note)};
}

IntegralValue operator+(const IntegralValue& a, const IntegralValue& b) {
  if (a.status == IntegralStatus::Failed) return a;
  if (b.status == IntegralStatus::Failed) return b;
  if (a.status == IntegralStatus::Divergent && b.status == IntegralStatus::Divergent) {
    if (a.direction != b.direction) return IntegralValue::failed("opposite divergences");
    return a;
  }
  if (a.status == IntegralStatus::Divergent) return a;
  if (b.status == IntegralStatus::Divergent) return b;
  return {a.value + b.value, a.error + b.error, IntegralStatus::Finite, 0, {}};
}

IntegralValue operator-(const IntegralValue& a) { return -1.0 * a; }

IntegralValue operator*(double k, const IntegralValue& a) {
  IntegralValue out = a;
  if (a.status == IntegralStatus::Finite) {
    out.value = k * a.value;
    out.error = std::abs(k) * a.error;
  } else if (a.status == IntegralStatus::Divergent) {
    if (k == 0.0) return {};
    out.direction = k > 0 ? a.direction : -a.direction;
    out.value = out.direction * kInf;
  }
  return out;
}

IntegralValue integrate_singular(const SingularIntegrand& f, double lo, double hi, const QuadOptions& opts) {
  if (!(lo <= hi)) throw DomainError("integrate_singular: need lo <= hi");
  if (lo == hi || f.numerator.is_zero()) return {};

  std::vector<double> cuts{lo, hi};
  const double margin = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  for (const auto& fac : f.factors) {
    if (fac.half_power != 1 && fac.half_power != -1) throw DomainError("integrate_singular: half_power must be +-1");
    if (fac.p.is_zero()) return IntegralValue::failed("zero factor");
    if (fac.p.is_constant()) {
      if (fac.p(0.0) < 0.0) return IntegralValue::failed("integrand factor negative on the range");
      continue;
    }
    for (const auto& r : real_roots(fac.p, lo, hi)) {
      if (r.value > lo + margin && r.value < hi - margin) cuts.push_back(r.value);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const std::size_t halves = 2 * (cuts.size() - 1);
  QuadOptions local = opts;
  local.abs_tol = opts.abs_tol / static_cast<double>(halves);

  IntegralValue total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    const double m = 0.5 * (a + b);
    total = total + half_piece(f, a, 1.0, m - a, local);
    total = total + half_piece(f, b, -1.0, b - m, local);
    if (total.status == IntegralStatus::Failed) return total;
  }
  return total;
}

IntegralValue singular_integral(const Polynomial& N, const Polynomial& G, const HillInterval& I, const QuadOptions& opts) {
  SingularIntegrand f{N, {{1.0 - G, -1}, {1.0 + G, -1}}};
  return integrate_singular(f, I.lo, I.hi, opts);
}

}  // namespace jetgeo
