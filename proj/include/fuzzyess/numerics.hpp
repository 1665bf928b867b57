#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fuzzyess/errors.hpp"

namespace fuzzyess::numerics {

// Polynomial of degree <= 4 in a local coordinate t: sum of coeffs[k] * t^k.
struct Polynomial {
  static constexpr int kMaxDegree = 4;
  std::array<double, kMaxDegree + 1> coeffs{};

  static Polynomial constant(double c) { return Polynomial{{c, 0, 0, 0, 0}}; }
  static Polynomial linear(double c0, double c1) { return Polynomial{{c0, c1, 0, 0, 0}}; }

  double operator()(double t) const noexcept;
  int degree() const noexcept;

  // Antiderivative vanishing at t = 0. Throws NumericError if the result would
  // exceed kMaxDegree.
  Polynomial integral() const;
  // q(t) = p(t + d).
  Polynomial shifted(double d) const noexcept;
  Polynomial affine(double scale, double offset) const noexcept;

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
};

// Continuous piecewise polynomial on [breakpoints.front(), breakpoints.back()].
// Piece k is expressed in t = x - breakpoints[k], which keeps the coefficients
// well conditioned when the domain sits far from the origin.
class PiecewisePoly {
 public:
  // Throws std::invalid_argument unless the breakpoints are strictly
  // increasing, there is one piece per segment, and the function is
  // continuous at interior breakpoints to 1e-12 relative.
  PiecewisePoly(std::vector<double> breakpoints, std::vector<Polynomial> pieces);

  // Piecewise-linear interpolant through (xs[k], ys[k]).
  static PiecewisePoly interpolate_linear(std::span<const double> xs, std::span<const double> ys);

  double lo() const noexcept { return breakpoints_.front(); }
  double hi() const noexcept { return breakpoints_.back(); }
  std::size_t segment_count() const noexcept { return pieces_.size(); }
  std::span<const double> breakpoints() const noexcept { return breakpoints_; }
  std::span<const Polynomial> pieces() const noexcept { return pieces_; }

  // Throws std::domain_error outside [lo(), hi()].
  double operator()(double x) const;

  // F(x) = integral of *this from lo() to x.
  PiecewisePoly antiderivative() const;
  PiecewisePoly affine(double scale, double offset) const;
  // Same function with additional (interior) breakpoints inserted.
  PiecewisePoly refined(std::span<const double> points) const;

  // Pointwise product. Both operands must share the same domain.
  friend PiecewisePoly product(const PiecewisePoly& p, const PiecewisePoly& q);

 private:
  PiecewisePoly() = default;
  std::size_t segment_of(double x) const noexcept;

  std::vector<double> breakpoints_;
  std::vector<Polynomial> pieces_;
};

// Exact integral of p over [lo, hi]; throws std::domain_error if the bounds
// leave p's domain or lo > hi.
double integrate_segments(const PiecewisePoly& p, double lo, double hi);

// Locates the zero crossing of a non-increasing f on [lo, hi] given
// f(lo) >= 0 >= f(hi). Returns a point x <= crossing with f(x) >= 0 within
// tol of the crossing, after at most ceil(log2((hi - lo) / tol)) halvings.
// Throws NumericError on a bracket violation.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("bisect: tolerance must be positive");
  if (!(lo <= hi)) throw std::invalid_argument("bisect: lo must not exceed hi");
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (!(f_lo >= 0.0) || !(f_hi <= 0.0)) {
    throw NumericError("bisect: crossing not bracketed on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] (f(lo) = " + std::to_string(f_lo) +
                       ", f(hi) = " + std::to_string(f_hi) + ")");
  }
  while (hi - lo > tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;  // interval exhausted at double resolution
    if (f(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // f(lo) >= 0 still holds, so the estimate never overshoots the crossing.
  return lo;
}

struct Sample {
  double x = 0.0;
  double value = 0.0;
};

// Running minimum of `value`. Throws std::invalid_argument unless x is
// strictly increasing.
std::vector<Sample> prefix_min_scan(std::span<const Sample> samples);

}  // namespace fuzzyess::numerics
