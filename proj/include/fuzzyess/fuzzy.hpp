#pragma once

#include <iosfwd>

namespace fuzzyess {

// Symmetric triangular fuzzy number T(a, b): peak at `center`, support
// [center - half_width, center + half_width]. A zero half-width is a crisp
// number.
class TriFuzzy {
 public:
  constexpr TriFuzzy() = default;
  // Throws std::invalid_argument for a negative or non-finite field.
  TriFuzzy(double center, double half_width);

  static TriFuzzy crisp(double value) { return TriFuzzy(value, 0.0); }

  constexpr double center() const noexcept { return center_; }
  constexpr double half_width() const noexcept { return half_width_; }
  constexpr double lower() const noexcept { return center_ - half_width_; }
  constexpr double upper() const noexcept { return center_ + half_width_; }
  constexpr bool is_crisp() const noexcept { return half_width_ == 0.0; }

  friend constexpr bool operator==(const TriFuzzy&, const TriFuzzy&) = default;

 private:
  double center_ = 0.0;
  double half_width_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const TriFuzzy& f);

// Degree in [0, 1]. For a crisp number this is the indicator of the center.
double membership(const TriFuzzy& f, double x) noexcept;

// c * T(a, b) = T(c a, c b). Requires c >= 0; scale(f, 0) is the crisp zero.
TriFuzzy scale(const TriFuzzy& f, double c);

// T(a, b) + T(a', b') = T(a + a', b + b').
TriFuzzy add(const TriFuzzy& f, const TriFuzzy& g);

}  // namespace fuzzyess
