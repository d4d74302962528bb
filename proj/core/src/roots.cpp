#include "jetgeo/hill/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jetgeo/error.hpp"

namespace jetgeo {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Safeguarded Newton on a bracket [a, b] with p(a) p(b) < 0 and p monotone inside.
RootInfo refine(const Polynomial& p, const Polynomial& dp, double a, double b, double fa,
                const RootOptions& opts) {
  double x = 0.5 * (a + b);
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double fx = p(x);
    if (fx == 0.0) return {x, 1, x, x};
    if ((fx < 0.0) == (fa < 0.0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
    const double width_tol = 4.0 * kEps * std::max(std::abs(a), std::abs(b)) + 1e-300;
    if (b - a <= width_tol) return {0.5 * (a + b), 1, a, b};

    const double d = dp(x);
    double next = d != 0.0 ? x - fx / d : std::numeric_limits<double>::quiet_NaN();
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) <= 2.0 * kEps * std::abs(x) + 1e-300) return {next, 1, a, b};
    x = next;
  }
  throw ConvergenceError("real_roots: bracket refinement did not converge");
}

std::vector<RootInfo> roots_impl(const Polynomial& p, double lo, double hi, const RootOptions& opts) {
  const auto deg = p.degree();
  if (!deg) throw DomainError("real_roots: zero polynomial");
  std::vector<RootInfo> out;
  if (*deg == 0) return out;
  if (*deg == 1) {
    const double r = -p.coeff(0) / p.coeff(1);
    if (r >= lo && r <= hi) out.push_back({r, 1, r, r});
    return out;
  }

  const Polynomial dp = p.derivative();
  const auto crit = roots_impl(dp, lo, hi, opts);

  struct Node {
    double x;
    double value;
    bool is_root;
  };
  std::vector<Node> nodes;
  nodes.reserve(crit.size() + 2);
  auto push = [&](double x, const RootInfo* c) {
    const double v = p(x);
    bool root = v == 0.0;
    if (c != nullptr && std::abs(v) <= opts.zero_tol * p.abs_eval(x)) root = true;
    if (root) {
      RootInfo r = c != nullptr ? *c : RootInfo{x, 0, x, x};
      r.multiplicity += 1;
      out.push_back(r);
    }
    nodes.push_back({x, v, root});
  };

  if (crit.empty() || crit.front().value > lo) push(lo, nullptr);
  for (const auto& c : crit) push(c.value, &c);
  if (crit.empty() || crit.back().value < hi) push(hi, nullptr);

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& l = nodes[i];
    const Node& r = nodes[i + 1];
    if (l.is_root || r.is_root || !(r.x > l.x)) continue;
    if ((l.value < 0.0) != (r.value < 0.0)) out.push_back(refine(p, dp, l.x, r.x, l.value, opts));
  }
  for (auto& r : out) r.value += 0.0;  // no negative zero
  std::sort(out.begin(), out.end(), [](const RootInfo& a, const RootInfo& b) { return a.value < b.value; });
  return out;
}

}  // namespace

std::vector<RootInfo> real_roots(const Polynomial& p, double lo, double hi, const RootOptions& opts) {
  if (!(lo < hi)) throw DomainError("real_roots: need lo < hi");
  return roots_impl(p, lo, hi, opts);
}

}  // namespace jetgeo
