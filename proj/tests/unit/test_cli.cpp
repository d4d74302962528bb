#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jetgeo/io/csv.hpp"
#include "jetgeo_cli/cli.hpp"
#include "xml_check.hpp"

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "jetgeo");
  std::ostringstream out, err;
  const int code = jetgeo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string p14() {
  // (x/sqrt3)^14 = x^14 / 3^7
  std::string s;
  for (int i = 0; i < 14; ++i) s += "0 ";
  return s + jetgeo::format_real(1.0 / 2187.0);
}

std::filesystem::path scratch(const std::string& name) {
  const auto d = std::filesystem::temp_directory_path() / ("jetgeo_cli_" + name);
  std::filesystem::remove_all(d);
  std::filesystem::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, ClassifyKink) {
  const auto r = run({"classify", "--poly", "-1 0 2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "lo,hi,lo_critical,hi_critical,class\n-1,0,0,1,Homoclinic\n0,1,1,0,Homoclinic\n");
}

TEST(Cli, ClassifyAcceptsUnicodeMinusAndPencil) {
  const auto r = run({"classify", "--poly", "−1 0 2", "--pencil", "0,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Homoclinic"), std::string::npos);
}

TEST(Cli, PeriodsHarmonic) {
  const auto r = run({"periods", "--poly", "0 1", "--interval", "-1,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("L = 6.283185307179586"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("dz = 3.141592653589793"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify", "--poly", "1 two"}).code, jetgeo::cli::kExitUsage);
  EXPECT_EQ(run({"classify", "--poly", "0 1", "--bogus"}).code, jetgeo::cli::kExitUsage);
  EXPECT_EQ(run({}).code, jetgeo::cli::kExitUsage);
  EXPECT_EQ(run({"periods", "--poly-file", "/nonexistent/poly.txt"}).code, jetgeo::cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--poly", "0 0 1"}).code, jetgeo::cli::kExitDomain);
  EXPECT_EQ(run({"periods", "--example", "F0", "--pencil", "0,0.5", "--interval", "-1.3,1.3"}).code,
            jetgeo::cli::kExitDomain);
  EXPECT_EQ(run({"--help"}).code, jetgeo::cli::kExitOk);
}

TEST(Cli, SweepIsDeterministic) {
  const auto a = run({"sweep", "--example", "F0", "--grid", "5"});
  const auto b = run({"sweep", "--example", "F0", "--grid", "5"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "a,b,dt,dy,dz,cost_y,cost_z,diverged_flag");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 7) << line;
  }
  EXPECT_GT(rows, 0);
  EXPECT_NE(run({"sweep", "--poly", "0 1"}).code, 0);
}

TEST(Cli, ConfigFileAndOverride) {
  const auto dir = scratch("config");
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "poly = 0 1\ninterval = -1,1\n";
  const auto r = run({"periods", "--config", cfg.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("L = 6.283185307179586"), std::string::npos);
  // The command line wins over the file.
  const auto o = run({"classify", "--config", cfg.string(), "--poly", "-1 0 2"});
  EXPECT_NE(o.out.find("Homoclinic"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, TraceFormats) {
  const auto csv = run({"trace", "--poly", "0 1", "--duration", "0.1", "--step", "0.05"});
  EXPECT_EQ(csv.code, 0) << csv.err;
  EXPECT_EQ(csv.out.substr(0, 8), "t,x,y,z\n");
  const auto jet = run({"trace", "--poly", "-1 0 2", "--k", "2", "--start", "0.2,0,0", "--duration", "0.1"});
  EXPECT_EQ(jet.code, 0) << jet.err;
  EXPECT_EQ(jet.out.substr(0, jet.out.find('\n')), "t,x,u_2,u_1,u_0");
  const auto svg = run({"trace", "--poly", "0 0 1", "--pencil", "0,1", "--format", "svg", "--duration", "5"});
  EXPECT_EQ(svg.code, 0) << svg.err;
  EXPECT_EQ(oracle::xml_root(svg.out), "svg");
  EXPECT_EQ(run({"trace", "--poly", "0 1", "--format", "pdf"}).code, jetgeo::cli::kExitUsage);
}

TEST(Cli, PlotCharts) {
  const auto lb = run({"plot", "--lowbound", "--range", "1.7321,10", "--grid", "12"});
  EXPECT_EQ(lb.code, 0) << lb.err;
  EXPECT_EQ(oracle::xml_root(lb.out), "svg");
  EXPECT_NE(lb.out.find("0.58"), std::string::npos);
  const auto cb = run({"plot", "--cost-bdry", "--grid", "8"});
  EXPECT_EQ(cb.code, 0) << cb.err;
  EXPECT_EQ(oracle::xml_root(cb.out), "svg");
}

TEST(Cli, VerifyExtremeMember) {
  const auto r = run({"verify", "--seagull-P", p14()});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
  EXPECT_NE(r.out.find("cost0_limit(F1) = 0.5790109314"), std::string::npos);

  const auto dir = scratch("verify");
  const auto w = run({"verify", "--example", "F1", "--out", dir.string()});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "report.txt"));
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "lowbound.csv"));
  std::filesystem::remove_all(dir);
}
