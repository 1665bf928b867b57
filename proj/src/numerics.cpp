#include "fuzzyess/numerics.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuzzyess::numerics {

double Polynomial::operator()(double t) const noexcept {
  double acc = 0.0;
  for (int k = kMaxDegree; k >= 0; --k) acc = acc * t + coeffs[k];
  return acc;
}

int Polynomial::degree() const noexcept {
  for (int k = kMaxDegree; k > 0; --k) {
    if (coeffs[k] != 0.0) return k;
  }
  return 0;
}

Polynomial Polynomial::integral() const {
  if (coeffs[kMaxDegree] != 0.0) throw NumericError("Polynomial::integral: degree cap exceeded");
  Polynomial out;
  for (int k = 0; k < kMaxDegree; ++k) out.coeffs[k + 1] = coeffs[k] / (k + 1);
  return out;
}

Polynomial Polynomial::shifted(double d) const noexcept {
  // Repeated synthetic division by (t - (-d)) gives the Taylor coefficients at d.
  Polynomial out = *this;
  if (d == 0.0) return out;
  for (int i = 0; i < kMaxDegree; ++i) {
    for (int k = kMaxDegree - 1; k >= i; --k) out.coeffs[k] += d * out.coeffs[k + 1];
  }
  return out;
}

Polynomial Polynomial::affine(double scale, double offset) const noexcept {
  Polynomial out;
  for (int k = 0; k <= kMaxDegree; ++k) out.coeffs[k] = scale * coeffs[k];
  out.coeffs[0] += offset;
  return out;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp + dq > Polynomial::kMaxDegree) throw NumericError("Polynomial product: degree cap exceeded");
  Polynomial out;
  for (int i = 0; i <= dp; ++i) {
    for (int j = 0; j <= dq; ++j) out.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  }
  return out;
}

PiecewisePoly::PiecewisePoly(std::vector<double> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breakpoints_.size() < 2) throw std::invalid_argument("PiecewisePoly: need at least two breakpoints");
  if (pieces_.size() != breakpoints_.size() - 1) {
    throw std::invalid_argument("PiecewisePoly: segment count must equal breakpoints - 1");
  }
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k] < breakpoints_[k + 1])) {
      throw std::invalid_argument("PiecewisePoly: breakpoints must be strictly increasing");
    }
  }
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    const double left = pieces_[k - 1](breakpoints_[k] - breakpoints_[k - 1]);
    const double right = pieces_[k](0.0);
    const double scale = std::max({1.0, std::abs(left), std::abs(right)});
    if (std::abs(left - right) > 1e-12 * scale) {
      throw std::invalid_argument("PiecewisePoly: discontinuity at breakpoint " + std::to_string(breakpoints_[k]));
    }
  }
}

PiecewisePoly PiecewisePoly::interpolate_linear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate_linear: size mismatch");
  std::vector<Polynomial> pieces;
  if (xs.size() >= 2) pieces.reserve(xs.size() - 1);
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double slope = (ys[k + 1] - ys[k]) / (xs[k + 1] - xs[k]);
    pieces.push_back(Polynomial::linear(ys[k], slope));
  }
  return PiecewisePoly(std::vector<double>(xs.begin(), xs.end()), std::move(pieces));
}

std::size_t PiecewisePoly::segment_of(double x) const noexcept {
  const auto it = std::upper_bound(breakpoints_.begin() + 1, breakpoints_.end() - 1, x);
  return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
}

double PiecewisePoly::operator()(double x) const {
  if (!(x >= lo() && x <= hi())) throw std::domain_error("PiecewisePoly: evaluation outside domain");
  const std::size_t k = segment_of(x);
  return pieces_[k](x - breakpoints_[k]);
}

PiecewisePoly PiecewisePoly::antiderivative() const {
  PiecewisePoly out;
  out.breakpoints_ = breakpoints_;
  out.pieces_.reserve(pieces_.size());
  double accumulated = 0.0;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    Polynomial piece = pieces_[k].integral();
    piece.coeffs[0] = accumulated;
    accumulated = piece(breakpoints_[k + 1] - breakpoints_[k]);
    out.pieces_.push_back(piece);
  }
  return out;
}

PiecewisePoly PiecewisePoly::affine(double scale, double offset) const {
  PiecewisePoly out;
  out.breakpoints_ = breakpoints_;
  out.pieces_.reserve(pieces_.size());
  for (const auto& p : pieces_) out.pieces_.push_back(p.affine(scale, offset));
  return out;
}

PiecewisePoly PiecewisePoly::refined(std::span<const double> points) const {
  std::vector<double> merged(breakpoints_);
  for (double x : points) {
    if (x > lo() && x < hi()) merged.push_back(x);
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (merged.size() == breakpoints_.size()) return *this;

  PiecewisePoly out;
  out.pieces_.reserve(merged.size() - 1);
  for (std::size_t m = 0; m + 1 < merged.size(); ++m) {
    const std::size_t k = segment_of(merged[m]);
    out.pieces_.push_back(pieces_[k].shifted(merged[m] - breakpoints_[k]));
  }
  out.breakpoints_ = std::move(merged);
  return out;
}

PiecewisePoly product(const PiecewisePoly& p, const PiecewisePoly& q) {
  if (p.lo() != q.lo() || p.hi() != q.hi()) throw std::invalid_argument("product: domains differ");
  const PiecewisePoly pr = p.refined(q.breakpoints());
  const PiecewisePoly qr = q.refined(p.breakpoints());
  PiecewisePoly out;
  out.breakpoints_ = pr.breakpoints_;
  out.pieces_.reserve(pr.pieces_.size());
  for (std::size_t k = 0; k < pr.pieces_.size(); ++k) out.pieces_.push_back(pr.pieces_[k] * qr.pieces_[k]);
  return out;
}

double integrate_segments(const PiecewisePoly& p, double lo, double hi) {
  if (!(lo <= hi)) throw std::domain_error("integrate_segments: lo > hi");
  if (lo < p.lo() || hi > p.hi()) throw std::domain_error("integrate_segments: bounds outside domain");
  const auto bp = p.breakpoints();
  const auto pieces = p.pieces();
  double total = 0.0;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const double a = std::max(lo, bp[k]);
    const double b = std::min(hi, bp[k + 1]);
    if (a >= b) continue;
    const Polynomial anti = pieces[k].integral();
    total += anti(b - bp[k]) - anti(a - bp[k]);
  }
  return total;
}

std::vector<Sample> prefix_min_scan(std::span<const Sample> samples) {
  std::vector<Sample> out;
  out.reserve(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (k > 0 && !(samples[k].x > samples[k - 1].x)) {
      throw std::invalid_argument("prefix_min_scan: x must be strictly increasing");
    }
    const double running = k == 0 ? samples[k].value : std::min(out.back().value, samples[k].value);
    out.push_back({samples[k].x, running});
  }
  return out;
}

}  // namespace fuzzyess::numerics
