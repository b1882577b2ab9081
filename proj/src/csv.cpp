#include "sympfd/csv.hpp"

#include <fmt/format.h>

namespace sympfd {

std::string format_number(double x) { return fmt::format("{:.17g}", x + 0.0); }

void CsvWriter::comment(std::string_view line) { out_ << "# " << line << '\n'; }

void CsvWriter::header(const std::vector<std::string>& names) {
  out_ << fmt::format("{}", fmt::join(names, ",")) << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_number(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::labeled_row(std::string_view label, const std::vector<double>& values) {
  out_ << label;
  for (double v : values) out_ << ',' << format_number(v);
  out_ << '\n';
}

}  // namespace sympfd
