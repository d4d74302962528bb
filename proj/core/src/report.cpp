#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jetgeo/error.hpp"
#include "jetgeo/io/csv.hpp"
#include "jetgeo/verify/theorem.hpp"

namespace jetgeo {

std::string report_text(const MinimalityReport& r) {
  std::ostringstream o;
  o << "minimality report\n";
  o << "F = " << to_text(r.F) << '\n';
  if (r.P) o << "P = " << to_text(*r.P) << '\n';
  o << "in certified class: " << (r.in_class ? "yes" : "no") << '\n';
  o << "verdict: " << to_string(r.verdict) << "\n\n";
  for (const auto& c : r.checks) {
    o << '[' << (c.inconclusive ? "inconclusive" : c.passed ? "pass" : "fail") << "] " << c.name << '\n';
    if (!c.grid.empty()) o << "  grid: " << c.grid << '\n';
    for (const auto& [k, v] : c.evidence) o << "  " << k << " = " << v << '\n';
  }
  if (!r.notes.empty()) {
    o << "\nnotes\n";
    for (const auto& n : r.notes) o << "  " << n << '\n';
  }
  return o.str();
}

std::string report_json(const MinimalityReport& r) {
  using nlohmann::ordered_json;
  auto coeffs = [](const Polynomial& p) { return std::vector<double>(p.coeffs().begin(), p.coeffs().end()); };
  ordered_json j;
  j["F"] = coeffs(r.F);
  j["P"] = r.P ? ordered_json(coeffs(*r.P)) : ordered_json(nullptr);
  j["in_class"] = r.in_class;
  j["verdict"] = std::string(to_string(r.verdict));
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e = ordered_json::object();
    for (const auto& [k, v] : c.evidence) {
      // Repeated keys (several failures) collect into an array.
      if (!e.contains(k)) {
        e[k] = v;
      } else {
        if (!e[k].is_array()) e[k] = ordered_json::array({e[k]});
        e[k].push_back(v);
      }
    }
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"inconclusive", c.inconclusive},
                           {"grid", c.grid},
                           {"evidence", e}});
  }
  j["notes"] = r.notes;
  j["tables"] = ordered_json::array();
  for (const auto& t : r.tables) j["tables"].push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows.size()}});
  return j.dump(2) + "\n";
}

std::vector<std::string> write_side_tables(const MinimalityReport& r, const std::string& prefix) {
  std::vector<std::string> paths;
  for (const auto& t : r.tables) {
    const std::string path = prefix + t.name + ".csv";
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    CsvWriter w(f);
    w.header(t.columns);
    for (const auto& row : t.rows) w.row(row);
    paths.push_back(path);
  }
  return paths;
}

}  // namespace jetgeo
