#include "fuzzyess/satisfaction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fuzzyess/numerics.hpp"

namespace fuzzyess {

using numerics::PiecewisePoly;

void SFConfig::validate() const {
  if (grid_resolution < 64) throw std::invalid_argument("SFConfig: grid_resolution must be >= 64");
  if (eps_resolution < 16) throw std::invalid_argument("SFConfig: eps_resolution must be >= 16");
  if (mode == SfMode::kExact && tnorm != TNorm::kProduct) {
    throw std::invalid_argument("SFConfig: exact mode requires the product T-norm; use grid mode for min");
  }
  if (!(tolerance > 0.0) || !(crossing_tolerance > 0.0) || !(containment_tolerance >= 0.0)) {
    throw std::invalid_argument("SFConfig: tolerances must be positive");
  }
}

namespace {

double step(double k, double l) { return k > l ? 1.0 : (k == l ? 0.5 : 0.0); }

// Triangle membership at a node, exact at the three defining points.
double hat_value(double x, double lower, double center, double upper) {
  if (x <= lower || x >= upper) return 0.0;
  if (x == center) return 1.0;
  return x < center ? (x - lower) / (center - lower) : (upper - x) / (upper - center);
}

PiecewisePoly hat(std::span<const double> nodes, double lower, double center, double upper) {
  std::array<double, 6> ys{};
  for (std::size_t k = 0; k < nodes.size(); ++k) ys[k] = hat_value(nodes[k], lower, center, upper);
  return PiecewisePoly::interpolate_linear(nodes, std::span<const double>(ys.data(), nodes.size()));
}

// Integral of mu_first(x) mu_second(y) over x > y, both given on a shared
// domain: the tail integral of `first` is piecewise quadratic, so the
// integrand is piecewise cubic.
double ordered_mass(const PiecewisePoly& first, const PiecewisePoly& second) {
  const PiecewisePoly cumulative = first.antiderivative();
  const double total = cumulative(cumulative.hi());
  const PiecewisePoly tail = cumulative.affine(-1.0, total);
  return numerics::integrate_segments(product(tail, second), first.lo(), first.hi());
}

// Mass of `f` strictly to the left of x, normalized to its area.
double left_fraction(const TriFuzzy& f, double x) {
  if (x <= f.lower()) return 0.0;
  if (x >= f.upper()) return 1.0;
  const std::array<double, 3> nodes{f.lower(), f.center(), f.upper()};
  const PiecewisePoly mu = hat(nodes, nodes[0], nodes[1], nodes[2]);
  return numerics::integrate_segments(mu, mu.lo(), x) / numerics::integrate_segments(mu, mu.lo(), mu.hi());
}

struct Node {
  double x;
  double weight;
};

std::vector<Node> grid_nodes(const TriFuzzy& f, int resolution) {
  if (f.is_crisp()) return {{f.center(), 1.0}};
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(resolution));
  const double h = 2.0 * f.half_width() / resolution;
  for (int i = 0; i < resolution; ++i) {
    const double x = f.lower() + (i + 0.5) * h;
    nodes.push_back({x, membership(f, x)});
  }
  return nodes;
}

double grid_product(const std::vector<Node>& xa, const std::vector<Node>& yb) {
  double total_a = 0.0;
  double total_b = 0.0;
  for (const auto& n : xa) total_a += n.weight;
  for (const auto& n : yb) total_b += n.weight;

  double greater = 0.0;
  double below = 0.0;  // sum of B weights with y < current x
  std::size_t j = 0;
  for (const auto& n : xa) {
    while (j < yb.size() && yb[j].x < n.x) below += yb[j++].weight;
    double tie = 0.0;
    for (std::size_t t = j; t < yb.size() && yb[t].x == n.x; ++t) tie += yb[t].weight;
    greater += n.weight * (below + 0.5 * tie);
  }
  return greater / (total_a * total_b);
}

// Fenwick tree over ranks of B's weights, answering sum of min(c, w_j) over
// the inserted nodes in O(log n).
class MinAccumulator {
 public:
  explicit MinAccumulator(std::vector<double> sorted_weights)
      : sorted_(std::move(sorted_weights)), sum_(sorted_.size() + 1, 0.0), count_(sorted_.size() + 1, 0) {}

  void insert(double w) {
    std::size_t r = static_cast<std::size_t>(std::lower_bound(sorted_.begin(), sorted_.end(), w) - sorted_.begin()) + 1;
    ++inserted_;
    for (; r < sum_.size(); r += r & (~r + 1)) {
      sum_[r] += w;
      ++count_[r];
    }
  }

  double sum_of_min(double c) const {
    std::size_t r = static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), c) - sorted_.begin());
    double below = 0.0;
    std::size_t n_below = 0;
    for (; r > 0; r -= r & (~r + 1)) {
      below += sum_[r];
      n_below += count_[r];
    }
    return below + c * static_cast<double>(inserted_ - n_below);
  }

 private:
  std::vector<double> sorted_;
  std::vector<double> sum_;
  std::vector<std::size_t> count_;
  std::size_t inserted_ = 0;
};

double grid_min(const std::vector<Node>& xa, const std::vector<Node>& yb) {
  std::vector<double> sorted;
  sorted.reserve(yb.size());
  for (const auto& n : yb) sorted.push_back(n.weight);
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> prefix(sorted.size() + 1, 0.0);
  for (std::size_t k = 0; k < sorted.size(); ++k) prefix[k + 1] = prefix[k] + sorted[k];

  MinAccumulator inserted(sorted);
  double greater = 0.0;
  double total = 0.0;
  std::size_t j = 0;
  for (const auto& n : xa) {
    while (j < yb.size() && yb[j].x < n.x) inserted.insert(yb[j++].weight);
    double tie = 0.0;
    for (std::size_t t = j; t < yb.size() && yb[t].x == n.x; ++t) tie += std::min(n.weight, yb[t].weight);
    greater += inserted.sum_of_min(n.weight) + 0.5 * tie;

    const auto pos = static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), n.weight) - sorted.begin());
    total += prefix[pos] + n.weight * static_cast<double>(sorted.size() - pos);
  }
  return greater / total;
}

}  // namespace

SatisfactionIntegrals satisfaction_integrals(const TriFuzzy& a, const TriFuzzy& b) {
  if (a.is_crisp() || b.is_crisp()) {
    throw std::invalid_argument("satisfaction_integrals: operands must have positive half-width");
  }
  // Work relative to b's center; the integrand depends only on differences.
  const double ca = a.center() - b.center();
  const double la = ca - a.half_width();
  const double ua = ca + a.half_width();
  const double lb = -b.half_width();
  const double ub = b.half_width();

  std::array<double, 6> nodes{la, ca, ua, lb, 0.0, ub};
  std::sort(nodes.begin(), nodes.end());
  const auto count = static_cast<std::size_t>(std::unique(nodes.begin(), nodes.end()) - nodes.begin());
  const std::span<const double> bp(nodes.data(), count);

  const PiecewisePoly mu_a = hat(bp, la, ca, ua);
  const PiecewisePoly mu_b = hat(bp, lb, 0.0, ub);
  return {ordered_mass(mu_a, mu_b), ordered_mass(mu_b, mu_a)};
}

double sf_greater(const TriFuzzy& a, const TriFuzzy& b, const SFConfig& cfg) {
  cfg.validate();
  if (a.is_crisp() && b.is_crisp()) return step(a.center(), b.center());
  // Both memberships are symmetric about a shared center.
  if (a.center() == b.center()) return 0.5;
  // Supports that overlap by rounding noise only carry no mass worth keeping.
  const double slack = cfg.tolerance * std::max({1.0, std::abs(a.center()), std::abs(b.center())});
  if (a.lower() >= b.upper() - slack) return 1.0;
  if (a.upper() <= b.lower() + slack) return 0.0;

  if (cfg.mode == SfMode::kGrid) return sf_greater_grid(a, b, cfg.grid_resolution, cfg.tnorm);

  if (a.is_crisp()) return left_fraction(b, a.center());
  if (b.is_crisp()) return 1.0 - left_fraction(a, b.center());
  const SatisfactionIntegrals parts = satisfaction_integrals(a, b);
  return std::clamp(parts.greater / parts.total(), 0.0, 1.0);
}

double sf_less(const TriFuzzy& a, const TriFuzzy& b, const SFConfig& cfg) {
  return 1.0 - sf_greater(a, b, cfg);
}

double sf_greater_grid(const TriFuzzy& a, const TriFuzzy& b, int resolution, TNorm tnorm) {
  if (resolution < 64) throw std::invalid_argument("sf_greater_grid: resolution must be >= 64");
  if (a.is_crisp() && b.is_crisp()) {
    throw std::invalid_argument("sf_greater_grid: at least one operand must be fuzzy");
  }
  const auto xa = grid_nodes(a, resolution);
  const auto yb = grid_nodes(b, resolution);
  return tnorm == TNorm::kProduct ? grid_product(xa, yb) : grid_min(xa, yb);
}

double sf_greater_oracle(const TriFuzzy& a, const TriFuzzy& b, int resolution) {
  return sf_greater_grid(a, b, resolution, TNorm::kProduct);
}

}  // namespace fuzzyess
