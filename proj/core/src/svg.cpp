#include "jetgeo/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "jetgeo/error.hpp"

namespace jetgeo {
namespace {

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v, int prec = 6) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*g", prec, v);
  return buf;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Round step of roughly (hi - lo) / n: 1, 2 or 5 times a power of ten.
double nice_step(double lo, double hi, int n) {
  const double raw = (hi - lo) / std::max(1, n);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (m * mag >= raw) return m * mag;
  return 10.0 * mag;
}

}  // namespace

std::string render_line_chart(const ChartSpec& spec, const std::vector<Series>& series) {
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (!std::isfinite(xmin)) throw DomainError("render_line_chart: no finite samples");
  if (spec.reference_y) {
    ymin = std::min(ymin, *spec.reference_y);
    ymax = std::max(ymax, *spec.reference_y);
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double left = 70, right = 20, top = 40, bottom = 50;
  const double pw = spec.width - left - right, ph = spec.height - top - bottom;
  auto X = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto Y = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\"" << spec.height
    << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\"" << spec.height << "\" fill=\"#ffffff\"/>\n";
  o << "<text x=\"" << coord(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
    << xml_escape(spec.title) << "</text>\n";

  o << "<g font-size=\"11\" stroke-width=\"1\">\n";
  const double xs = nice_step(xmin, xmax, spec.ticks);
  for (double t = std::ceil(xmin / xs) * xs; t <= xmax + 1e-9 * xs; t += xs) {
    o << "<line x1=\"" << coord(X(t)) << "\" y1=\"" << coord(top) << "\" x2=\"" << coord(X(t)) << "\" y2=\""
      << coord(top + ph) << "\" stroke=\"#e6e6e6\"/>\n";
    o << "<text x=\"" << coord(X(t)) << "\" y=\"" << coord(top + ph + 16) << "\" text-anchor=\"middle\">"
      << num(std::abs(t) < 1e-12 * xs ? 0.0 : t) << "</text>\n";
  }
  const double ys = nice_step(ymin, ymax, spec.ticks);
  for (double t = std::ceil(ymin / ys) * ys; t <= ymax + 1e-9 * ys; t += ys) {
    o << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(Y(t)) << "\" x2=\"" << coord(left + pw) << "\" y2=\""
      << coord(Y(t)) << "\" stroke=\"#e6e6e6\"/>\n";
    o << "<text x=\"" << coord(left - 6) << "\" y=\"" << coord(Y(t) + 4) << "\" text-anchor=\"end\">"
      << num(std::abs(t) < 1e-12 * ys ? 0.0 : t) << "</text>\n";
  }
  o << "</g>\n";
  o << "<rect x=\"" << coord(left) << "\" y=\"" << coord(top) << "\" width=\"" << coord(pw) << "\" height=\""
    << coord(ph) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
  o << "<text x=\"" << coord(left + pw / 2) << "\" y=\"" << coord(spec.height - 10.0)
    << "\" text-anchor=\"middle\" font-size=\"12\">" << xml_escape(spec.x_label) << "</text>\n";
  o << "<text x=\"16\" y=\"" << coord(top + ph / 2) << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
    << coord(top + ph / 2) << ")\">" << xml_escape(spec.y_label) << "</text>\n";

  if (spec.reference_y) {
    const double y = Y(*spec.reference_y);
    o << "<line x1=\"" << coord(left) << "\" y1=\"" << coord(y) << "\" x2=\"" << coord(left + pw) << "\" y2=\""
      << coord(y) << "\" stroke=\"#888888\" stroke-dasharray=\"6 4\"/>\n";
    o << "<text x=\"" << coord(left + pw - 4) << "\" y=\"" << coord(y - 4) << "\" text-anchor=\"end\" font-size=\"11\">"
      << xml_escape(spec.reference_label.empty() ? num(*spec.reference_y) : spec.reference_label) << "</text>\n";
  }

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    std::string pts;
    auto flush = [&] {
      if (!pts.empty())
        o << "<polyline fill=\"none\" stroke=\"" << xml_escape(s.color) << "\" stroke-width=\"1.6\" points=\"" << pts
          << "\"/>\n";
      pts.clear();
    };
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (!pts.empty()) pts += ' ';
      pts += coord(X(s.x[i])) + ',' + coord(Y(s.y[i]));
    }
    flush();
    const double ly = top + 14 + 16.0 * static_cast<double>(k);
    o << "<line x1=\"" << coord(left + 10) << "\" y1=\"" << coord(ly) << "\" x2=\"" << coord(left + 30) << "\" y2=\""
      << coord(ly) << "\" stroke=\"" << xml_escape(s.color) << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << coord(left + 36) << "\" y=\"" << coord(ly + 4) << "\" font-size=\"11\">" << xml_escape(s.label)
      << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace jetgeo
