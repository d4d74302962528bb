#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "jetgeo/flow/geodesic.hpp"
#include "jetgeo/flow/jet.hpp"

namespace jetgeo {

/// Rows of samples with named columns:
///   magnetic trace: t, x, y, z          (k = -1)
///   jet trace:      t, x, u_k, ..., u_0 (k >= 0)
struct TraceTable {
  int k = -1;
  double step = 0.0;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

TraceTable trace_table(const MagneticTrace& tr);
TraceTable trace_table(const JetTrace& tr);

void write_trace_csv(std::ostream& out, const TraceTable& t);

/// Binary layout, all little-endian:
///   "JGTR", uint32 version (1), int32 k, uint32 columns, uint64 count, float64 step,
///   then count * columns float64 samples in row order.
/// Column names are implied by k.
inline constexpr std::uint32_t kTraceFormatVersion = 1;
void write_trace_binary(std::ostream& out, const TraceTable& t);
/// Throws ParseError on a bad magic, version or truncated stream.
TraceTable read_trace_binary(std::istream& in);

}  // namespace jetgeo
