#include "jetgeo/io/trace_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

#include "jetgeo/error.hpp"
#include "jetgeo/io/csv.hpp"

namespace jetgeo {
namespace {

constexpr char kMagic[4] = {'J', 'G', 'T', 'R'};

template <class T>
void put(std::ostream& out, T v) {
  std::array<char, sizeof(T)> b;
  std::memcpy(b.data(), &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
  out.write(b.data(), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  std::array<char, sizeof(T)> b;
  if (!in.read(b.data(), sizeof(T))) throw ParseError("trace file truncated");
  if constexpr (std::endian::native == std::endian::big) std::reverse(b.begin(), b.end());
  T v;
  std::memcpy(&v, b.data(), sizeof(T));
  return v;
}

std::vector<std::string> columns_for(int k) {
  if (k < 0) return {"t", "x", "y", "z"};
  std::vector<std::string> c{"t", "x"};
  for (int m = k; m >= 0; --m) c.push_back("u_" + std::to_string(m));
  return c;
}

}  // namespace

TraceTable trace_table(const MagneticTrace& tr) {
  TraceTable t;
  t.step = tr.step;
  t.columns = columns_for(-1);
  for (std::size_t i = 0; i < tr.states.size(); ++i)
    t.rows.push_back({tr.times[i], tr.states[i].x, tr.states[i].y, tr.states[i].z});
  return t;
}

TraceTable trace_table(const JetTrace& tr) {
  TraceTable t;
  t.step = tr.step;
  t.k = tr.states.empty() ? 0 : tr.states.front().k();
  t.columns = columns_for(t.k);
  for (std::size_t i = 0; i < tr.states.size(); ++i) {
    std::vector<double> row{tr.times[i], tr.states[i].x};
    row.insert(row.end(), tr.states[i].u.begin(), tr.states[i].u.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

void write_trace_csv(std::ostream& out, const TraceTable& t) {
  CsvWriter w(out);
  w.header(t.columns);
  for (const auto& r : t.rows) w.row(r);
}

void write_trace_binary(std::ostream& out, const TraceTable& t) {
  const auto ncols = static_cast<std::uint32_t>(columns_for(t.k).size());
  for (const auto& r : t.rows)
    if (r.size() != ncols) throw DomainError("write_trace_binary: row width does not match k");
  out.write(kMagic, 4);
  put<std::uint32_t>(out, kTraceFormatVersion);
  put<std::int32_t>(out, t.k);
  put<std::uint32_t>(out, ncols);
  put<std::uint64_t>(out, t.rows.size());
  put<double>(out, t.step);
  for (const auto& r : t.rows)
    for (double v : r) put<double>(out, v);
}

TraceTable read_trace_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) throw ParseError("not a trace file (bad magic)");
  if (get<std::uint32_t>(in) != kTraceFormatVersion) throw ParseError("unsupported trace file version");
  TraceTable t;
  t.k = get<std::int32_t>(in);
  const auto ncols = get<std::uint32_t>(in);
  const auto count = get<std::uint64_t>(in);
  t.step = get<double>(in);
  t.columns = columns_for(t.k);
  if (ncols != t.columns.size()) throw ParseError("trace file column count does not match k");
  t.rows.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<double> r(ncols);
    for (auto& v : r) v = get<double>(in);
    t.rows.push_back(std::move(r));
  }
  return t;
}

}  // namespace jetgeo
