#include "polya/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace polya::cli {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) throw std::logic_error("row width does not match header");
  rows_.push_back(std::move(row));
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string cell_text(const Cell& cell) {
  struct {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  } visitor;
  return std::visit(visitor, cell);
}

void write_csv_field(const std::string& field, std::ostream& os) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    os << field;
    return;
  }
  os << '"';
  for (char c : field) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

void write_json_string(std::string_view s, std::ostream& os) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

void write_json_cell(const Cell& cell, std::ostream& os) {
  if (const auto* s = std::get_if<std::string>(&cell)) {
    write_json_string(*s, os);
  } else if (const auto* d = std::get_if<double>(&cell); d && !std::isfinite(*d)) {
    write_json_string(format_real(*d), os);
  } else {
    os << cell_text(cell);
  }
}

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  const auto& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) os << ',';
    write_csv_field(cols[i], os);
  }
  os << '\n';
  for (const auto& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      write_csv_field(cell_text(row[i]), os);
    }
    os << '\n';
  }
}

void write_json(const Table& table, std::string_view command, std::ostream& os) {
  const auto& cols = table.columns();
  os << "{\"command\": ";
  write_json_string(command, os);
  os << ", \"columns\": [";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) os << ", ";
    write_json_string(cols[i], os);
  }
  os << "], \"rows\": [";
  const auto& rows = table.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << (r ? ",\n  {" : "\n  {");
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) os << ", ";
      write_json_string(cols[i], os);
      os << ": ";
      write_json_cell(rows[r][i], os);
    }
    os << '}';
  }
  os << (rows.empty() ? "]}\n" : "\n]}\n");
}

}  // namespace polya::cli
