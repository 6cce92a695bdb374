#ifndef CAPAFLAT_REPORT_HPP_
#define CAPAFLAT_REPORT_HPP_

// Row-oriented result emission.  Every command produces a homogeneous list
// of rows; emit_rows renders them as CSV (with a header row) or JSON lines.
// Floating-point values are printed with 17 significant digits in both
// formats so output is bitwise reproducible across runs.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace capaflat {

using CellValue = std::variant<std::string, double, std::int64_t, bool>;

struct Row {
  std::vector<std::pair<std::string, CellValue>> cells;

  Row& text(const std::string& key, std::string v);
  Row& number(const std::string& key, double v);
  Row& integer(const std::string& key, std::int64_t v);
  Row& flag(const std::string& key, bool v);
};

enum class OutputFormat { Csv, JsonLines };

// "%.17g" rendering used everywhere a double is shown.
std::string format_number(double v);

// All rows must share the key sequence of the first row; violations raise
// std::invalid_argument.  An empty list emits nothing (CSV has no header
// to derive).
void emit_rows(const std::vector<Row>& rows, OutputFormat format,
               std::ostream& out);

}  // namespace capaflat

#endif  // CAPAFLAT_REPORT_HPP_
