#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "jetgeo/error.hpp"
#include "jetgeo/flow/jet.hpp"
#include "jetgeo/io/csv.hpp"
#include "jetgeo/io/svg.hpp"
#include "jetgeo/io/trace_io.hpp"
#include "jetgeo/poly/seagull.hpp"
#include "xml_check.hpp"

using namespace jetgeo;

TEST(Csv, FormatRealRoundTrips) {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1e-300, 6.02214076e23, std::acos(-1.0)}) {
    EXPECT_EQ(std::stod(format_real(v)), v) << format_real(v);
  }
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_real(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_real(std::nan("")), "nan");
}

TEST(Csv, WriterEscapes) {
  std::ostringstream s;
  CsvWriter w(s);
  w.header({"a", "b,c"});
  w.row(std::vector<double>{1.5, -2.0});
  w.row(std::vector<std::string>{"say \"hi\"", "line\nbreak"});
  EXPECT_EQ(s.str(), "a,\"b,c\"\n1.5,-2\n\"say \"\"hi\"\"\",\"line\nbreak\"\n");
}

TEST(Svg, WellFormedChart) {
  ChartSpec spec;
  spec.title = "A & B <test>";
  spec.x_label = "u";
  spec.y_label = "value";
  spec.reference_y = 0.58;
  spec.reference_label = "0.58";
  Series s1{"one", {0, 1, 2, 3}, {1, 2, std::nan(""), 4}, "#1f77b4"};
  Series s2{"two", {0, 3}, {0.5, 0.7}, "#d62728"};
  const std::string svg = render_line_chart(spec, {s1, s2});
  EXPECT_EQ(oracle::xml_root(svg), "svg");
  EXPECT_NE(svg.find("A &amp; B &lt;test&gt;"), std::string::npos);
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  // The NaN sample splits the first series into two polylines.
  std::size_t count = 0;
  for (std::size_t p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++count;
  EXPECT_EQ(count, 3u);
  EXPECT_THROW(render_line_chart(spec, {Series{"empty", {0.0}, {std::nan("")}}}), DomainError);
}

TEST(TraceIo, MagneticTableAndCsv) {
  const auto tr = magnetic_trace(seagull_F0(), {0.0, 0.5}, {0.0, 0.0, 0.0}, 1, 0.1, 0.05);
  const TraceTable t = trace_table(tr);
  EXPECT_EQ(t.k, -1);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"t", "x", "y", "z"}));
  ASSERT_EQ(t.rows.size(), 3u);
  std::ostringstream s;
  write_trace_csv(s, t);
  std::istringstream in(s.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x,y,z");
  int n = 0;
  while (std::getline(in, line)) ++n;
  EXPECT_EQ(n, 3);
}

TEST(TraceIo, JetBinaryRoundTrip) {
  const JetTrace tr = jet_geodesic(Polynomial{-1.0, 0.0, 2.0}, JetState{0.1, {0.0, 0.5, -0.5}}, 1, 1.0, 1e-2);
  const TraceTable t = trace_table(tr);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"t", "x", "u_2", "u_1", "u_0"}));
  std::stringstream buf;
  write_trace_binary(buf, t);
  EXPECT_EQ(buf.str().substr(0, 4), "JGTR");
  EXPECT_EQ(buf.str().size(), 4 + 4 + 4 + 4 + 8 + 8 + t.rows.size() * 5 * 8);
  const TraceTable back = read_trace_binary(buf);
  EXPECT_EQ(back.k, 2);
  EXPECT_EQ(back.step, t.step);
  EXPECT_EQ(back.columns, t.columns);
  EXPECT_EQ(back.rows, t.rows);
}

TEST(TraceIo, BinaryErrors) {
  std::istringstream bad_magic(std::string("XXXX\x01\0\0\0", 8));
  EXPECT_THROW(read_trace_binary(bad_magic), ParseError);
  const auto tr = magnetic_trace(Polynomial{0.0, 1.0}, {0.0, 1.0}, {0.0, 0.0, 0.0}, 1, 0.1, 0.05);
  std::stringstream buf;
  write_trace_binary(buf, trace_table(tr));
  std::string bytes = buf.str();
  std::istringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_trace_binary(truncated), ParseError);
  bytes[4] = 9;
  std::istringstream bad_version(bytes);
  EXPECT_THROW(read_trace_binary(bad_version), ParseError);
}
