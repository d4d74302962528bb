#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace jetgeo {

/// Shortest decimal that reads back to the same double ("inf", "-inf", "nan" otherwise).
std::string format_real(double v);

/// Minimal RFC 4180 writer: cells holding a comma, quote or newline are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);
  void row(const std::vector<std::string>& cells);

 private:
  static std::string escape(std::string_view cell);
  std::ostream& out_;
};

}  // namespace jetgeo
