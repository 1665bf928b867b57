#include "fuzzyess/ess.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "fuzzyess/numerics.hpp"

namespace fuzzyess {

namespace {

void check_pair(const SymGame& g, std::size_t i, std::size_t j) {
  if (i >= g.size() || j >= g.size()) throw std::out_of_range("strategy index out of range");
  if (i == j) throw std::invalid_argument("incumbent and mutant strategies must differ");
}

void check_share(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("mutant share must lie in [0, 1]");
}

TriFuzzy mix(const TriFuzzy& resident, const TriFuzzy& invader, double eps) {
  return add(scale(resident, 1.0 - eps), scale(invader, eps));
}

double step(double gap) { return gap > 0.0 ? 1.0 : (gap == 0.0 ? 0.5 : 0.0); }

double snap(double gap, double x, double y, double tol) {
  return std::abs(gap) <= tol * std::max({1.0, std::abs(x), std::abs(y)}) ? 0.0 : gap;
}

// Piecewise-constant curve of an all-crisp pair: `left` on (0, root), 0.5 at
// the root, `right` beyond it. root >= 1 means no sign change inside (0, 1).
struct StepProfile {
  double left = 0.5;
  double right = 0.5;
  double root = 1.0;

  double mu(double eps_bar) const { return eps_bar <= root ? left : std::min({left, 0.5, right}); }

  double resistibility() const {
    if (root >= 1.0) return left;
    return std::max(std::min(left, root), mu(1.0));
  }
};

StepProfile crisp_profile(const SymGame& g, std::size_t i, std::size_t j, double tol) {
  const double u = snap(g.payoff(i, i).center() - g.payoff(j, i).center(), g.payoff(i, i).center(),
                        g.payoff(j, i).center(), tol);
  const double v = snap(g.payoff(i, j).center() - g.payoff(j, j).center(), g.payoff(i, j).center(),
                        g.payoff(j, j).center(), tol);
  StepProfile p;
  if ((u > 0.0 && v < 0.0) || (u < 0.0 && v > 0.0)) {
    p.left = step(u);
    p.right = step(v);
    p.root = u / (u - v);
  } else {
    p.left = p.right = step(u != 0.0 ? u : v);
  }
  return p;
}

bool crisp_pair(const SymGame& g, std::size_t i, std::size_t j) {
  return g.payoff(i, i).is_crisp() && g.payoff(i, j).is_crisp() && g.payoff(j, i).is_crisp() &&
         g.payoff(j, j).is_crisp();
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::size_t k = next++; k < count && !failed; k = next++) {
          try {
            fn(k);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

TriFuzzy expected_incumbent(const SymGame& g, std::size_t i, std::size_t j, double eps) {
  check_pair(g, i, j);
  check_share(eps);
  return mix(g.payoff(i, i), g.payoff(i, j), eps);
}

TriFuzzy expected_mutant(const SymGame& g, std::size_t i, std::size_t j, double eps) {
  check_pair(g, i, j);
  check_share(eps);
  return mix(g.payoff(j, i), g.payoff(j, j), eps);
}

SfCurve::SfCurve(const SymGame& g, std::size_t i, std::size_t j, SFConfig cfg)
    : ii_((check_pair(g, i, j), g.payoff(i, i))),
      ij_(g.payoff(i, j)),
      ji_(g.payoff(j, i)),
      jj_(g.payoff(j, j)),
      cfg_(cfg),
      crisp_(crisp_pair(g, i, j)) {
  cfg_.validate();
}

double SfCurve::operator()(double eps) const {
  check_share(eps);
  return sf_greater(mix(ii_, ij_, eps), mix(ji_, jj_, eps), cfg_);
}

SfCurve sf_curve(const SymGame& g, std::size_t i, std::size_t j, const SFConfig& cfg) { return SfCurve(g, i, j, cfg); }

double mu_ij(const SymGame& g, std::size_t i, std::size_t j, double eps_bar, const SFConfig& cfg) {
  const SfCurve curve(g, i, j, cfg);
  if (!(eps_bar > 0.0 && eps_bar <= 1.0)) throw std::invalid_argument("mu_ij: eps_bar must lie in (0, 1]");
  if (curve.is_crisp()) return crisp_profile(g, i, j, cfg.tolerance).mu(eps_bar);

  // Same approximant the crossing search uses: running minimum over the
  // global eps grid strictly below eps_bar, then the curve at eps_bar itself.
  const int n = cfg.eps_resolution;
  double running = curve(0.0);
  for (int k = 1; k < n; ++k) {
    const double eps = static_cast<double>(k) / n;
    if (eps >= eps_bar) break;
    running = std::min(running, curve(eps));
  }
  return std::min(running, curve(eps_bar));
}

PairResult analyze_pair(const SymGame& g, std::size_t i, std::size_t j, const SFConfig& cfg) {
  const SfCurve curve(g, i, j, cfg);
  PairResult out;
  out.sf_at_zero = curve(0.0);

  auto classify = [&out] {
    if (out.resistibility >= 1.0) {
      out.kind = Resistance::kFull;
      out.crossing = 1.0;
    } else if (out.resistibility <= 0.0) {
      out.kind = Resistance::kNone;
      out.crossing = 0.0;
    } else {
      out.kind = Resistance::kCrossing;
      out.crossing = out.resistibility;
    }
  };

  if (curve.is_crisp()) {
    out.analytic = true;
    out.resistibility = crisp_profile(g, i, j, cfg.tolerance).resistibility();
    classify();
    return out;
  }

  if (out.sf_at_zero <= 0.0) {
    out.resistibility = 0.0;
    classify();
    return out;
  }

  const int n = cfg.eps_resolution;
  double running = out.sf_at_zero;
  double cell_lo = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double eps = static_cast<double>(k) / n;
    const double next = std::min(running, curve(eps));
    if (next < eps) {
      const double floor = running;
      const auto gap = [&](double x) { return std::min(floor, curve(x)) - x; };
      out.resistibility = std::clamp(numerics::bisect(gap, cell_lo, eps, cfg.crossing_tolerance), 0.0, 1.0);
      classify();
      return out;
    }
    running = next;
    cell_lo = eps;
  }
  out.resistibility = 1.0;
  classify();
  return out;
}

double resistibility(const SymGame& g, std::size_t i, std::size_t j, const SFConfig& cfg) {
  return analyze_pair(g, i, j, cfg).resistibility;
}

std::vector<CurvePoint> trace_pair(const SymGame& g, std::size_t i, std::size_t j, int points, const SFConfig& cfg) {
  if (points < 2) throw std::invalid_argument("trace_pair: need at least two points");
  const SfCurve curve(g, i, j, cfg);
  std::vector<CurvePoint> out;
  out.reserve(static_cast<std::size_t>(points));

  const bool crisp = curve.is_crisp();
  const StepProfile profile = crisp ? crisp_profile(g, i, j, cfg.tolerance) : StepProfile{};
  const int n = cfg.eps_resolution;
  double running = curve(0.0);
  int k = 1;
  for (int p = 0; p < points; ++p) {
    const double eps = static_cast<double>(p) / (points - 1);
    const double sf = curve(eps);
    double mu = sf;
    if (p > 0) {
      if (crisp) {
        mu = profile.mu(eps);
      } else {
        for (; k < n && static_cast<double>(k) / n < eps; ++k) running = std::min(running, curve(static_cast<double>(k) / n));
        mu = std::min(running, sf);
      }
    }
    out.push_back({eps, sf, mu, std::min(mu, eps)});
  }
  return out;
}

bool EssReport::consistent() const {
  const std::size_t n = memberships.size();
  for (std::size_t i = 0; i < n; ++i) {
    double lowest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double r = resistibility[i][j];
      if (!(r >= 0.0 && r <= 1.0)) return false;
      lowest = std::min(lowest, r);
    }
    if (memberships[i] != lowest) return false;
  }
  return true;
}

EssReport fuzzy_ess(const SymGame& g, const SFConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.size();
  EssReport report;
  report.strategies = g.strategies();
  report.resistibility.assign(n, std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));
  report.diagnostics.assign(n, std::vector<PairResult>(n));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  parallel_for(pairs.size(), cfg.threads, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    report.diagnostics[i][j] = analyze_pair(g, i, j, cfg);
  });

  report.memberships.assign(n, 1.0);
  for (const auto& [i, j] : pairs) {
    report.resistibility[i][j] = report.diagnostics[i][j].resistibility;
    report.memberships[i] = std::min(report.memberships[i], report.resistibility[i][j]);
  }
  report.ranking.resize(n);
  for (std::size_t i = 0; i < n; ++i) report.ranking[i] = i;
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [&](std::size_t a, std::size_t b) { return report.memberships[a] > report.memberships[b]; });
  return report;
}

CrispEssResult crisp_ess_check(const SymGame& g, const SFConfig& cfg) {
  if (!g.is_crisp()) throw std::invalid_argument("crisp_ess_check: every payoff must be crisp");
  const std::size_t n = g.size();
  CrispEssResult out;
  out.is_ess.assign(n, true);
  out.barrier.assign(n, std::vector<std::optional<double>>(n));
  out.reduction.assign(n, std::vector<double>(n, std::numeric_limits<double>::quiet_NaN()));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // (1 - e) * first + e * second > 0 must hold for all small e > 0.
      const double first = snap(g.payoff(i, i).center() - g.payoff(j, i).center(), g.payoff(i, i).center(),
                                g.payoff(j, i).center(), cfg.tolerance);
      const double second = snap(g.payoff(i, j).center() - g.payoff(j, j).center(), g.payoff(i, j).center(),
                                 g.payoff(j, j).center(), cfg.tolerance);
      const bool barrier_exists = first > 0.0 || (first == 0.0 && second > 0.0);
      if (barrier_exists) {
        // The inequality fails from the root of the affine gap onwards, if any.
        const double sup = second >= 0.0 ? 1.0 : first / (first - second);
        out.barrier[i][j] = sup;
        out.reduction[i][j] = sup;
      } else {
        out.is_ess[i] = false;
        out.reduction[i][j] = (first == 0.0 && second == 0.0) ? 0.5 : 0.0;
      }
    }
  }

  out.pipeline = fuzzy_ess(g, cfg);
  out.pipeline_agrees = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && out.pipeline.resistibility[i][j] != out.reduction[i][j]) out.pipeline_agrees = false;
    }
  }
  return out;
}

}  // namespace fuzzyess
