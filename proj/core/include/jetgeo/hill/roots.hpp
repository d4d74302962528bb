#pragma once

#include <vector>

#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

struct RootInfo {
  double value = 0.0;
  /// 1 for a simple root; k+1 when `value` is a root of multiplicity k of the derivative.
  int multiplicity = 1;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct RootOptions {
  /// A critical point c counts as a root when |p(c)| <= zero_tol * sum|c_i||c|^i.
  double zero_tol = 1e-12;
  int max_iterations = 300;
};

/// All real roots of p in [lo, hi], ascending.
///
/// Roots are isolated recursively: the real roots of p' split [lo, hi] into monotone
/// pieces, each holding at most one simple root (found by safeguarded Newton on a sign
/// change). A root of p' where p also vanishes is reported as a multiple root of p.
/// Throws DomainError for p == 0 or lo >= hi, ConvergenceError if refinement stalls.
std::vector<RootInfo> real_roots(const Polynomial& p, double lo, double hi, const RootOptions& opts = {});

}  // namespace jetgeo
