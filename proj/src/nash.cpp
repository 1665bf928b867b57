#include "fuzzyess/nash.hpp"

#include <algorithm>
#include <limits>


namespace fuzzyess {

NashReport fuzzy_nash(const BiGame& g, const SFConfig& cfg) {
  cfg.validate();
  NashReport report;
  report.degrees.assign(g.rows(), std::vector<double>(g.cols(), 1.0));
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
      double degree = 1.0;
      for (std::size_t dev = 0; dev < g.rows(); ++dev) {
        if (dev != r) degree = std::min(degree, sf_greater(g.payoff1(r, c), g.payoff1(dev, c), cfg));
      }
      for (std::size_t dev = 0; dev < g.cols(); ++dev) {
        if (dev != c) degree = std::min(degree, sf_greater(g.payoff2(r, c), g.payoff2(r, dev), cfg));
      }
      report.degrees[r][c] = degree;
    }
  }
  if (g.is_symmetric()) {
    for (std::size_t i = 0; i < g.rows(); ++i) report.symmetric_degrees.push_back(report.degrees[i][i]);
  }
  return report;
}

std::vector<double> symmetric_nash_degrees(const SymGame& g, const SFConfig& cfg) {
  cfg.validate();
  std::vector<double> out(g.size(), 1.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (j != i) out[i] = std::min(out[i], sf_greater(g.payoff(i, i), g.payoff(j, i), cfg));
    }
  }
  return out;
}

ContainmentCheck verify_theorem1(const SymGame& g, const SFConfig& cfg) {
  ContainmentCheck out;
  out.nash = symmetric_nash_degrees(g, cfg);
  out.ess_report = fuzzy_ess(g, cfg);
  out.ess = out.ess_report.memberships;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double margin = out.nash[i] - out.ess[i];
    out.worst_margin = std::min(out.worst_margin, margin);
    if (margin < -cfg.containment_tolerance) out.holds = false;
  }
  return out;
}

}  // namespace fuzzyess
