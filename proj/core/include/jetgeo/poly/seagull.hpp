#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

/// (x / sqrt 3)^n as a polynomial.
Polynomial scaled_power(int n);

/// F = 1 - (x^2 - 1)^2 (1 + P + (x/sqrt3)^14) / 6, without any validation.
Polynomial specific_seagull_polynomial(const Polynomial& P);

/// The two extreme members of the specific class: P = (x/sqrt3)^14 and P = 1.
Polynomial seagull_F0();
Polynomial seagull_F1();

enum class SpecificClassCondition { None, Degree, PeakNormalization, InnerBand, OuterBand, OuterSlope };

std::string to_string(SpecificClassCondition c);

struct SpecificClassOptions {
  int grid_points = 10000;
  double grid_half_width = 6.0;
  /// Slack for the non-strict comparisons, relative to the size of the compared values.
  double rel_tol = 1e-9;
};

/// Outcome of the grid check of the class conditions on P:
///   InnerBand   (x/sqrt3)^14 <= |P| <= 1            for |x| <= sqrt3
///   OuterBand   1 <= P <= (x/sqrt3)^14              for |x| >= sqrt3
///   OuterSlope  |P'| <= (14/sqrt3) |x/sqrt3|^13     for |x| >= sqrt3
/// Beyond the grid, the outer conditions are settled from the sign of each difference
/// polynomial past its last real root.
struct SpecificClassCheck {
  SpecificClassCondition failed = SpecificClassCondition::None;
  double witness = 0.0;
  std::string detail;
  bool ok() const { return failed == SpecificClassCondition::None; }
};

SpecificClassCheck check_specific_class(const Polynomial& P, const SpecificClassOptions& opts = {});

/// Validated constructor; throws DomainError naming the failed condition and its witness.
Polynomial build_specific_seagull(const Polynomial& P, const SpecificClassOptions& opts = {});

/// Recovers P from F = 1 - (x^2-1)^2 W by exact division. Returns nullopt when (x^2-1)^2
/// does not divide 1 - F (remainder above `rel_tol` times the coefficient scale).
std::optional<Polynomial> recover_seagull_P(const Polynomial& F, double rel_tol = 1e-9);

struct SeagullReport {
  bool is_even = false;
  double max_value = 0.0;
  double interior_value_F0 = 0.0;
  std::vector<double> critical_points;
  double a_peak = 0.0;
  bool passes = false;
  std::vector<std::string> failures;
};

/// Checks: even, maximum 1 attained at +-a, 0 < F(0) < 1, critical points exactly {0, +-a}.
SeagullReport is_seagull(const Polynomial& F, double tol = 1e-9);

}  // namespace jetgeo
