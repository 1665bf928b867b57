#include "fuzzyess/cli/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace fuzzyess::cli {

void OutputSpec::validate() const {
  if (precision < 1 || precision > 12) throw std::invalid_argument("precision must be in [1, 12]");
}

std::string format_fixed(double value, int precision) {
  if (std::isnan(value)) return "-";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";

  // 1100 fractional digits hold the exact expansion of any double.
  constexpr int kExactDigits = 1100;
  std::string buf(kExactDigits + 400, '\0');
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), std::abs(value), std::chars_format::fixed,
                                 kExactDigits);
  buf.resize(static_cast<std::size_t>(res.ptr - buf.data()));

  const std::size_t dot = buf.find('.');
  std::string digits = buf.substr(0, dot) + buf.substr(dot + 1, static_cast<std::size_t>(precision));
  const bool round_up = buf[dot + 1 + static_cast<std::size_t>(precision)] >= '5';
  if (round_up) {
    std::size_t k = digits.size();
    while (k > 0) {
      --k;
      if (digits[k] == '9') {
        digits[k] = '0';
      } else {
        ++digits[k];
        break;
      }
      if (k == 0) digits.insert(digits.begin(), '1');
    }
  }
  const std::size_t int_len = digits.size() - static_cast<std::size_t>(precision);
  std::string out = digits.substr(0, int_len) + "." + digits.substr(int_len);
  const bool zero = std::all_of(digits.begin(), digits.end(), [](char c) { return c == '0'; });
  if (value < 0 && !zero) out.insert(out.begin(), '-');
  return out;
}

std::string TextTable::render(const std::string& indent) const {
  std::vector<std::size_t> widths;
  for (const auto& row : rows_) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows_) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        line += row[c] + std::string(widths[c] - row[c].size(), ' ');
      } else {
        line += "  " + std::string(widths[c] - row[c].size(), ' ') + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace fuzzyess::cli
