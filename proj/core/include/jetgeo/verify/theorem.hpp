#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jetgeo/poly/seagull.hpp"
#include "jetgeo/quad/gauss_kronrod.hpp"
#include "jetgeo/verify/scans.hpp"

namespace jetgeo {

/// Every grid and tolerance used by verify_theorem_main. A default-constructed config is
/// the reference configuration; reports are reproducible given the config.
struct VerifyConfig {
  QuadOptions quad{};
  /// Log-spaced u grid on [beta + u_offset, u_max].
  int u_points = 24;
  double u_offset = 0.01;
  double u_max = 10.0;
  /// Plus tau-lines: tau_lines of the u grid points (evenly picked), tau_points each.
  int tau_points = 20;
  int tau_lines = 10;
  int certificate_points = 100;
  /// Samples per side for the two pointwise comparisons with the extreme members.
  int sandwich_points = 2001;
  double sandwich_outer_max = 10.0;
  LegApproachOptions legs{};
  /// Allowed negative slack for the second differences of the lower bound.
  double convexity_slack = 1e-6;
  double threshold = 0.58;
  /// Run the pipeline on an F outside the certified class instead of refusing it.
  bool override_class = false;
  SpecificClassOptions class_opts{};
};

struct CheckResult {
  std::string name;
  bool passed = false;
  /// A quadrature failure or numerical exception prevented a decision.
  bool inconclusive = false;
  std::string grid;
  std::vector<std::pair<std::string, std::string>> evidence;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

/// A numeric side table of one scan, written out as CSV.
struct SideTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct MinimalityReport {
  Polynomial F;
  std::optional<Polynomial> P;
  bool in_class = false;
  std::vector<CheckResult> checks;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> notes;
  std::vector<SideTable> tables;

  const CheckResult* find(std::string_view name) const;
};

/// The log-spaced u grid of the config for a given F.
std::vector<double> verify_u_grid(const Polynomial& F, const VerifyConfig& cfg);

/// Runs the checks in order:
///   seagull_shape, specific_class, cost0_limit, lowbound_grid, cost_bdry_bound,
///   sandwich_inner, sandwich_outer, cost_monotonicity, leg1, leg2_minus, point10_minus.
/// The verdict is Pass only if every check passed; any failed check gives Fail, otherwise
/// any inconclusive check gives Inconclusive.
/// Throws DomainError when F is outside the specific class and cfg.override_class is unset.
MinimalityReport verify_theorem_main(const Polynomial& F, const VerifyConfig& cfg = {});

/// Human-readable rendering; deterministic for a given report.
std::string report_text(const MinimalityReport& r);

/// Structured rendering, schema:
///   { "F": [coeffs], "P": [coeffs] | null, "in_class": bool, "verdict": str,
///     "checks": [ { "name", "passed", "inconclusive", "grid", "evidence": {key: str} } ],
///     "notes": [str], "tables": [ { "name", "columns": [str], "rows": int } ] }
std::string report_json(const MinimalityReport& r);

/// One CSV per side table, "<prefix><table name>.csv". Returns the written paths.
std::vector<std::string> write_side_tables(const MinimalityReport& r, const std::string& prefix);

}  // namespace jetgeo
