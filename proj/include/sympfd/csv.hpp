#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sympfd {

/// 17 significant digits: round-trips binary64.
std::string format_number(double x);

/// Comma-separated output with '#' comment lines.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(std::string_view line);
  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);
  /// Leading text cell followed by numbers (footer rows).
  void labeled_row(std::string_view label, const std::vector<double>& values);

 private:
  std::ostream& out_;
};

}  // namespace sympfd
