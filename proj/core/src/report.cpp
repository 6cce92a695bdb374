#include "capaflat/report.hpp"

#include <cstdio>
#include <stdexcept>

namespace capaflat {

namespace {

// CSV fields are quoted only when needed; quotes double per RFC 4180.
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += ch;
    }
  }
  out += '"';
  return out;
}

std::string cell_to_string(const CellValue& v, bool json) {
  if (const auto* s = std::get_if<std::string>(&v)) {
    return json ? json_escape(*s) : csv_escape(*s);
  }
  if (const auto* d = std::get_if<double>(&v)) {
    return format_number(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return std::to_string(*i);
  }
  const bool b = std::get<bool>(v);
  if (json) return b ? "true" : "false";
  return b ? "true" : "false";
}

void check_schema(const std::vector<Row>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    bool ok = rows[i].cells.size() == rows[0].cells.size();
    if (ok) {
      for (std::size_t k = 0; k < rows[i].cells.size(); ++k) {
        if (rows[i].cells[k].first != rows[0].cells[k].first) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      throw std::invalid_argument(
          "emit_rows requires a homogeneous key sequence across rows");
    }
  }
}

}  // namespace

Row& Row::text(const std::string& key, std::string v) {
  cells.emplace_back(key, CellValue{std::move(v)});
  return *this;
}

Row& Row::number(const std::string& key, double v) {
  cells.emplace_back(key, CellValue{v});
  return *this;
}

Row& Row::integer(const std::string& key, std::int64_t v) {
  cells.emplace_back(key, CellValue{v});
  return *this;
}

Row& Row::flag(const std::string& key, bool v) {
  cells.emplace_back(key, CellValue{v});
  return *this;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_rows(const std::vector<Row>& rows, OutputFormat format,
               std::ostream& out) {
  if (rows.empty()) return;
  check_schema(rows);

  if (format == OutputFormat::Csv) {
    for (std::size_t k = 0; k < rows[0].cells.size(); ++k) {
      if (k) out << ',';
      out << csv_escape(rows[0].cells[k].first);
    }
    out << '\n';
    for (const Row& row : rows) {
      for (std::size_t k = 0; k < row.cells.size(); ++k) {
        if (k) out << ',';
        out << cell_to_string(row.cells[k].second, /*json=*/false);
      }
      out << '\n';
    }
    return;
  }

  for (const Row& row : rows) {
    out << '{';
    for (std::size_t k = 0; k < row.cells.size(); ++k) {
      if (k) out << ',';
      out << json_escape(row.cells[k].first) << ':';
      const CellValue& v = row.cells[k].second;
      if (std::holds_alternative<double>(v)) {
        // JSON number token; %.17g already emits a valid literal except
        // for non-finite values, which become strings.
        const double d = std::get<double>(v);
        const std::string s = format_number(d);
        if (s.find("inf") != std::string::npos ||
            s.find("nan") != std::string::npos) {
          out << json_escape(s);
        } else {
          out << s;
        }
      } else {
        out << cell_to_string(v, /*json=*/true);
      }
    }
    out << "}\n";
  }
}

}  // namespace capaflat
