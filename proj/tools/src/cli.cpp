#include "jetgeo_cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "jetgeo/error.hpp"
#include "jetgeo/flow/geodesic.hpp"
#include "jetgeo/flow/jet.hpp"
#include "jetgeo/hill/hill.hpp"
#include "jetgeo/io/csv.hpp"
#include "jetgeo/io/svg.hpp"
#include "jetgeo/io/trace_io.hpp"
#include "jetgeo/poly/seagull.hpp"
#include "jetgeo/quad/periods.hpp"
#include "jetgeo/registry.hpp"
#include "jetgeo/verify/diamond.hpp"
#include "jetgeo/verify/theorem.hpp"

namespace jetgeo::cli {
namespace {

struct RunConfig {
  std::string poly;
  std::string poly_file;
  std::string seagull_P;
  std::string example;
  std::string pencil = "0,1";
  std::string interval;
  std::string start = "0,0,0";
  std::string range;
  std::string out;
  std::string format;
  int v_sign = 1;
  int k = -1;
  int grid = 0;
  double step = 1e-3;
  double duration = 10.0;
  double tol = 1e-10;
  bool override_class = false;
  bool lowbound = false;
  bool cost_bdry = false;
  bool trace = false;
  // verify tuning
  double u_max = 10.0;
  int tau_points = 20;
  int tau_lines = 10;
};

// Parses "a,b[,c...]" into exactly n reals.
std::vector<double> parse_tuple(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": not a number: '" + item + "'");
    }
  }
  if (v.size() != n) throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " comma-separated values");
  return v;
}

struct Source {
  Polynomial F;
  std::string label;
};

Source load_F(const RunConfig& c, bool required = true) {
  const int given = !c.poly.empty() + !c.poly_file.empty() + !c.seagull_P.empty() + !c.example.empty();
  if (given > 1) throw ParseError("give only one of --poly, --poly-file, --seagull-P, --example");
  if (!c.poly.empty()) return {parse_polynomial(c.poly), "F"};
  if (!c.poly_file.empty()) {
    std::ifstream f(c.poly_file);
    if (!f) throw ParseError("cannot read polynomial file " + c.poly_file);
    std::stringstream ss;
    ss << f.rdbuf();
    return {parse_polynomial(ss.str()), "F"};
  }
  if (!c.seagull_P.empty()) {
    const Polynomial P = parse_polynomial(c.seagull_P);
    return {c.override_class ? specific_seagull_polynomial(P) : build_specific_seagull(P), "F"};
  }
  if (!c.example.empty()) return {registry_entry(c.example).F, c.example};
  if (required) throw ParseError("no polynomial given (use --poly, --poly-file, --seagull-P or --example)");
  return {};
}

PencilPoint load_pencil(const RunConfig& c) {
  const auto v = parse_tuple(c.pencil, 2, "--pencil");
  return {v[0], v[1]};
}

// The Hill interval closest to --interval, or the one containing 0, or the first one.
HillInterval pick_interval(const Polynomial& G, const RunConfig& c) {
  const auto all = hill_intervals(G);
  if (all.empty()) throw NoSolutionError("G^2 <= 1 nowhere: no Hill interval");
  if (!c.interval.empty()) {
    const auto v = parse_tuple(c.interval, 2, "--interval");
    const HillInterval* best = nullptr;
    double d = INFINITY;
    for (const auto& I : all) {
      const double e = std::abs(I.lo - v[0]) + std::abs(I.hi - v[1]);
      if (e < d) d = e, best = &I;
    }
    if (d > 1e-6 * std::max(1.0, std::abs(v[0]) + std::abs(v[1])))
      throw DomainError("--interval does not match a Hill interval of G (nearest [" + format_real(best->lo) + ", " +
                        format_real(best->hi) + "])");
    return *best;
  }
  for (const auto& I : all)
    if (I.lo <= 0.0 && 0.0 <= I.hi) return I;
  return all.front();
}

// Writes to --out, or to `out` when no path is given.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error("cannot write " + c.out);
  f << text;
}

std::string value_text(const IntegralValue& v) {
  switch (v.status) {
    case IntegralStatus::Finite: return format_real(v.value);
    case IntegralStatus::Divergent: return v.direction > 0 ? "+inf" : "-inf";
    case IntegralStatus::Failed: return "failed (" + v.note + ")";
  }
  return "?";
}

double value_or_nan(const IntegralValue& v) {
  if (v.finite()) return v.value;
  if (v.status == IntegralStatus::Divergent) return v.direction * INFINITY;
  return NAN;
}

QuadOptions quad(const RunConfig& c) {
  QuadOptions q;
  q.abs_tol = c.tol;
  return q;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const Source s = load_F(c);
  const Polynomial G = pencil_member(s.F, load_pencil(c));
  std::ostringstream o;
  CsvWriter w(o);
  w.header({"lo", "hi", "lo_critical", "hi_critical", "class"});
  for (const auto& I : hill_intervals(G))
    w.row(std::vector<std::string>{format_real(I.lo), format_real(I.hi), I.lo_critical ? "1" : "0",
                                   I.hi_critical ? "1" : "0", std::string(to_string(classify(G, I)))});
  emit(c, out, o.str());
  return kExitOk;
}

int cmd_trace(const RunConfig& c, std::ostream& out) {
  const Source s = load_F(c);
  const PencilPoint pt = load_pencil(c);
  const auto st = parse_tuple(c.start, 3, "--start");
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  TraceTable table;
  MagneticTrace mt;
  if (c.k >= 0) {
    JetState init{st[0], std::vector<double>(static_cast<std::size_t>(c.k) + 1, 0.0)};
    table = trace_table(jet_geodesic(pencil_member(s.F, pt), init, c.v_sign, c.duration, c.step));
  } else {
    mt = magnetic_trace(s.F, pt, {st[0], st[1], st[2]}, c.v_sign, c.duration, c.step);
    table = trace_table(mt);
  }
  if (fmt == "csv") {
    std::ostringstream o;
    write_trace_csv(o, table);
    emit(c, out, o.str());
  } else if (fmt == "bin") {
    if (c.out.empty()) throw ParseError("--format bin needs --out");
    std::ostringstream o(std::ios::binary);
    write_trace_binary(o, table);
    emit(c, out, o.str());
  } else if (fmt == "svg") {
    if (c.k >= 0) throw ParseError("--format svg draws the (x, y) projection of a magnetic trace; drop --k");
    Series sr{"geodesic", {}, {}, "#1f4e9c"};
    for (const auto& p : mt.states) {
      sr.x.push_back(p.x);
      sr.y.push_back(p.y);
    }
    ChartSpec spec;
    spec.title = "geodesic, (x, y) projection";
    spec.x_label = "x";
    spec.y_label = "y";
    emit(c, out, render_line_chart(spec, {sr}));
  } else {
    throw ParseError("trace: --format must be csv, bin or svg");
  }
  return kExitOk;
}

int cmd_periods(const RunConfig& c, std::ostream& out) {
  const Source s = load_F(c);
  const PencilPoint pt = load_pencil(c);
  const Polynomial G = pencil_member(s.F, pt);
  const HillInterval I = pick_interval(G, c);
  const GeodesicClass cls = classify(G, I);
  std::ostringstream o;
  o << "interval = " << format_real(I.lo) << ", " << format_real(I.hi) << '\n';
  o << "class = " << to_string(cls) << '\n';
  const Periods p = periods(s.F, pt, I, quad(c));
  o << "L = " << value_text(p.dt) << '\n';
  o << "dy = " << value_text(p.dy) << '\n';
  o << "dz = " << value_text(p.dz) << '\n';
  const double scale = std::max({1.0, std::abs(I.lo), std::abs(I.hi)});
  if (s.F.is_even() && std::abs(I.lo + I.hi) <= 1e-9 * scale && I.lo < 0.0 && I.hi > 0.0) {
    const DiamondValues h = diamond_periods(s.F, pt, quad(c));
    o << "half dt = " << value_text(h.dt) << '\n';
    o << "half dy = " << value_text(h.dy) << '\n';
    o << "half dz = " << value_text(h.dz) << '\n';
    o << "cost_y = " << value_text(h.cost_y) << '\n';
    o << "cost_z = " << value_text(h.cost_z) << '\n';
  }
  emit(c, out, o.str());
  return p.finite() ? kExitOk : kExitDomain;
}

int cmd_sweep(const RunConfig& c, std::ostream& out) {
  const Source s = load_F(c);
  if (!s.F.is_even()) throw DomainError("sweep: the diamond values need an even F");
  const int n = c.grid > 0 ? c.grid : 21;
  if (n < 2) throw ParseError("sweep: --grid must be at least 2");
  std::ostringstream o;
  CsvWriter w(o);
  w.header({"a", "b", "dt", "dy", "dz", "cost_y", "cost_z", "diverged_flag"});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const PencilPoint pt{-1.0 + 2.0 * i / (n - 1), -1.0 + 2.0 * j / (n - 1)};
      const DiamondRegion r = diamond_membership(pt);
      if (r != DiamondRegion::InteriorPlus && r != DiamondRegion::InteriorMinus) continue;
      std::vector<double> row{pt.a, pt.b};
      try {
        const DiamondValues v = diamond_periods(s.F, pt, quad(c));
        bool diverged = false;
        for (const auto* iv : {&v.dt, &v.dy, &v.dz, &v.cost_y, &v.cost_z}) {
          row.push_back(value_or_nan(*iv));
          if (iv->status == IntegralStatus::Divergent) diverged = true;
        }
        row.push_back(diverged ? 1.0 : 0.0);
      } catch (const Error&) {
        row.insert(row.end(), {NAN, NAN, NAN, NAN, NAN, 0.0});
      }
      w.row(row);
    }
  }
  emit(c, out, o.str());
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Source s = load_F(c);
  VerifyConfig cfg;
  cfg.quad.abs_tol = c.tol;
  cfg.override_class = c.override_class;
  if (c.grid > 0) cfg.u_points = c.grid;
  cfg.u_max = c.u_max;
  cfg.tau_points = c.tau_points;
  cfg.tau_lines = c.tau_lines;
  const MinimalityReport rep = verify_theorem_main(s.F, cfg);
  const std::string fmt = c.format.empty() ? "report" : c.format;
  if (fmt != "report" && fmt != "json") throw ParseError("verify: --format must be report or json");
  if (c.out.empty()) {
    out << (fmt == "json" ? report_json(rep) : report_text(rep));
  } else {
    // --out names a directory that receives the report, its structured form and the side tables.
    std::filesystem::create_directories(c.out);
    const std::string dir = (std::filesystem::path(c.out) / "").string();
    std::ofstream(dir + "report.txt") << report_text(rep);
    std::ofstream(dir + "report.json") << report_json(rep);
    write_side_tables(rep, dir);
    out << "verdict: " << to_string(rep.verdict) << '\n';
  }
  return rep.verdict == Verdict::Pass ? kExitOk : kExitDomain;
}

int cmd_plot(const RunConfig& c, std::ostream& out) {
  if (c.trace) {
    if (c.lowbound || c.cost_bdry) throw ParseError("plot: --trace draws one chart on its own");
    RunConfig t = c;
    t.format = "svg";
    t.k = -1;
    return cmd_trace(t, out);
  }
  if (!c.lowbound && !c.cost_bdry) throw ParseError("plot: choose --lowbound, --cost-bdry or --trace");
  const double sqrt3 = std::sqrt(3.0);
  double lo = sqrt3, hi = 10.0;
  if (!c.range.empty()) {
    const auto v = parse_tuple(c.range, 2, "--range");
    lo = v[0], hi = v[1];
  }
  if (!(hi > lo)) throw ParseError("--range: need lo < hi");
  const int n = c.grid > 0 ? c.grid : 200;
  if (n < 2) throw ParseError("plot: --grid must be at least 2");
  std::vector<double> us;
  for (int i = 0; i < n; ++i) us.push_back(lo + (hi - lo) * i / (n - 1));

  std::vector<Series> series;
  if (c.lowbound) {
    if (lo < sqrt3 * (1.0 - 1e-4)) throw DomainError("plot: the lower bound needs u >= sqrt 3");
    Series s{"Lowbound(u)", {}, {}, "#000000"};
    for (double u : us) {
      s.x.push_back(u);
      s.y.push_back(value_or_nan(lowbound(std::max(u, sqrt3), quad(c))));
    }
    series.push_back(std::move(s));
  }
  if (c.cost_bdry) {
    std::vector<std::pair<Source, std::string>> fs;
    const Source given = load_F(c, false);
    if (!given.F.is_zero()) {
      fs.push_back({given, "#b22222"});
    } else {
      fs.push_back({{registry_entry("F0").F, "F0"}, "#d62728"});
      fs.push_back({{registry_entry("F1").F, "F1"}, "#1f77b4"});
      fs.push_back({{registry_entry("P_quadratic").F, "P = (x/sqrt3)^2"}, "#7f7f7f"});
    }
    for (const auto& [src, color] : fs) {
      const double beta = outer_endpoint_beta(src.F);
      Series s{"Cost_bdry(u), " + src.label, {}, {}, color};
      for (double u : us) {
        s.x.push_back(u);
        s.y.push_back(u < beta ? NAN : value_or_nan(cost_bdry(src.F, u, quad(c))));
      }
      series.push_back(std::move(s));
    }
  }
  ChartSpec spec;
  spec.title = c.cost_bdry ? "Lowbound(u) and Cost_bdry(u)" : "Lowbound(u)";
  if (!c.lowbound) spec.title = "Cost_bdry(u)";
  spec.x_label = "u";
  spec.y_label = "value";
  spec.reference_y = 0.58;
  spec.reference_label = "0.58";
  emit(c, out, render_line_chart(spec, series));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Geodesics of magnetic and jet spaces over a polynomial F, and the minimality checks.", "jetgeo"};
  app.set_config("--config", "", "File of key = value lines; command-line flags take precedence");
  app.fallthrough();
  app.require_subcommand(1, 1);

  auto join = [](CLI::Option* o) { return o->multi_option_policy(CLI::MultiOptionPolicy::Join); };
  // A config line "pencil = 0,1" arrives as two values; glue them back together.
  auto tuple = [](CLI::Option* o) { return o->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join); };
  join(app.add_option("--poly", c.poly, "F as ascending space-separated coefficients"));
  app.add_option("--poly-file", c.poly_file, "Read F from a file in the --poly format");
  join(app.add_option("--seagull-P", c.seagull_P, "Build F from the class polynomial P (ascending coefficients)"));
  app.add_option("--example", c.example, "Use a named registry polynomial (F0, F1, P_quadratic, square, ...)");
  tuple(app.add_option("--pencil", c.pencil, "Pencil point a,b of G = a + bF"))->capture_default_str();
  tuple(app.add_option("--interval", c.interval, "Hill interval lo,hi (default: the one containing 0)"));
  tuple(app.add_option("--start", c.start, "Initial point x,y,z of a trace"))->capture_default_str();
  app.add_option("--v-sign", c.v_sign, "Initial direction of x' (+1 or -1)")->check(CLI::IsMember({-1, 1}))->capture_default_str();
  app.add_option("--k", c.k, "Lift the trace to the jet space J^k")->check(CLI::Range(0, 64));
  app.add_option("--step", c.step, "Integrator step")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--duration", c.duration, "Trace duration")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol", c.tol, "Absolute quadrature tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--grid", c.grid, "Grid size (sweep: per axis, verify: u points, plot: samples)")->check(CLI::NonNegativeNumber);
  tuple(app.add_option("--range", c.range, "Plot range lo,hi of u"));
  app.add_option("--out", c.out, "Output file (verify: output directory)");
  app.add_option("--format", c.format, "csv, bin or svg for trace; report or json for verify");
  app.add_flag("--override", c.override_class, "Accept F outside the specific class");
  app.add_flag("--lowbound", c.lowbound, "plot: the lower bound curve");
  app.add_flag("--cost-bdry", c.cost_bdry, "plot: the boundary cost curves");
  app.add_flag("--trace", c.trace, "plot: the (x, y) projection of a geodesic");
  app.add_option("--u-max", c.u_max, "verify: right end of the u grid")->capture_default_str();
  app.add_option("--tau-points", c.tau_points, "verify: tau samples per line")->check(CLI::Range(2, 10000))->capture_default_str();
  app.add_option("--tau-lines", c.tau_lines, "verify: number of tau-lines")->check(CLI::Range(1, 10000))->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "Hill intervals of G and their geodesic classes (CSV)");
  auto* trace_cmd = app.add_subcommand("trace", "Integrate a geodesic and emit its samples");
  auto* periods_cmd = app.add_subcommand("periods", "Period integrals and costs on a Hill interval");
  auto* sweep_cmd = app.add_subcommand("sweep", "Half-period values over a grid of the diamond (CSV)");
  auto* verify_cmd = app.add_subcommand("verify", "Run the minimality checks and write the report");
  auto* plot_cmd = app.add_subcommand("plot", "SVG charts of the lower bound and boundary costs");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(c, out);
    if (trace_cmd->parsed()) return cmd_trace(c, out);
    if (periods_cmd->parsed()) return cmd_periods(c, out);
    if (sweep_cmd->parsed()) return cmd_sweep(c, out);
    if (verify_cmd->parsed()) return cmd_verify(c, out);
    if (plot_cmd->parsed()) return cmd_plot(c, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace jetgeo::cli
