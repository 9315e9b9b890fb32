#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace polya::cli {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  void add_row(std::vector<Cell> row);

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_real(double x);

/// Header row then one line per row, LF endings, fields quoted when needed.
void write_csv(const Table& table, std::ostream& os);

/// {"command": ..., "columns": [...], "rows": [{...}, ...]}. Non-finite
/// reals are written as strings.
void write_json(const Table& table, std::string_view command, std::ostream& os);

}  // namespace polya::cli
