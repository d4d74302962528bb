#pragma once

#include <optional>
#include <string>
#include <vector>

namespace jetgeo {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#000000";
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 720;
  int height = 440;
  int ticks = 6;
  /// Horizontal dashed line, drawn when set.
  std::optional<double> reference_y;
  std::string reference_label;
};

/// Self-contained SVG line chart with linear axes, tick labels and a legend. Non-finite
/// samples break the polyline. Throws DomainError when no series has a finite point.
std::string render_line_chart(const ChartSpec& spec, const std::vector<Series>& series);

}  // namespace jetgeo
