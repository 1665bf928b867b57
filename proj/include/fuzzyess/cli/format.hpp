#pragma once

#include <string>
#include <vector>

namespace fuzzyess::cli {

enum class Format { kTable, kCsv, kJson };

struct OutputSpec {
  Format format = Format::kTable;
  int precision = 3;
  // Empty means standard output.
  std::string destination;

  // Throws std::invalid_argument unless precision is in [1, 12].
  void validate() const;
};

// Fixed-point text with `precision` decimals, rounding the exact binary value
// half away from zero. Never prints a negative zero. NaN prints as "-".
std::string format_fixed(double value, int precision);

// Minimal column-aligned text table.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::string render(const std::string& indent = "  ") const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

// RFC 4180 quoting for fields containing separators or quotes.
std::string csv_field(const std::string& field);

}  // namespace fuzzyess::cli
