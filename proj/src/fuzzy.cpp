#include "fuzzyess/fuzzy.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fuzzyess {

TriFuzzy::TriFuzzy(double center, double half_width) : center_(center), half_width_(half_width) {
  if (!std::isfinite(center) || !std::isfinite(half_width)) {
    throw std::invalid_argument("TriFuzzy: fields must be finite");
  }
  if (half_width < 0.0) {
    throw std::invalid_argument("TriFuzzy: half_width must be >= 0, got " + std::to_string(half_width));
  }
}

std::ostream& operator<<(std::ostream& os, const TriFuzzy& f) {
  return os << "T(" << f.center() << ", " << f.half_width() << ")";
}

double membership(const TriFuzzy& f, double x) noexcept {
  if (f.is_crisp()) return x == f.center() ? 1.0 : 0.0;
  const double d = std::abs(x - f.center());
  return d >= f.half_width() ? 0.0 : 1.0 - d / f.half_width();
}

TriFuzzy scale(const TriFuzzy& f, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("scale: factor must be >= 0");
  if (c == 0.0) return TriFuzzy{};
  return TriFuzzy(c * f.center(), c * f.half_width());
}

TriFuzzy add(const TriFuzzy& f, const TriFuzzy& g) {
  return TriFuzzy(f.center() + g.center(), f.half_width() + g.half_width());
}

}  // namespace fuzzyess
