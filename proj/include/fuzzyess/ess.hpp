#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fuzzyess/fuzzy.hpp"
#include "fuzzyess/game.hpp"
#include "fuzzyess/satisfaction.hpp"

namespace fuzzyess {

// (1 - eps) * payoff(i, i) + eps * payoff(i, j): an incumbent i facing a
// mutant share eps of strategy j. Requires i != j and eps in [0, 1].
TriFuzzy expected_incumbent(const SymGame& g, std::size_t i, std::size_t j, double eps);
// (1 - eps) * payoff(j, i) + eps * payoff(j, j): the mutant's expected payoff.
TriFuzzy expected_mutant(const SymGame& g, std::size_t i, std::size_t j, double eps);

// eps -> SF(E_I(eps) > E_M(eps)) for one incumbent/mutant pair. Holds its own
// copy of the four payoffs involved.
class SfCurve {
 public:
  SfCurve(const SymGame& g, std::size_t i, std::size_t j, SFConfig cfg);

  double operator()(double eps) const;

  // All four payoffs are crisp, so the curve is a step function.
  bool is_crisp() const noexcept { return crisp_; }
  // Center difference E_I - E_M at eps = 0 and eps = 1; the difference is
  // affine in between.
  double gap_at_zero() const noexcept { return ii_.center() - ji_.center(); }
  double gap_at_one() const noexcept { return ij_.center() - jj_.center(); }

 private:
  TriFuzzy ii_, ij_, ji_, jj_;
  SFConfig cfg_;
  bool crisp_ = false;
};

SfCurve sf_curve(const SymGame& g, std::size_t i, std::size_t j, const SFConfig& cfg = {});

// Infimum of the curve over (0, eps_bar), eps_bar in (0, 1].
double mu_ij(const SymGame& g, std::size_t i, std::size_t j, double eps_bar, const SFConfig& cfg = {});

enum class Resistance {
  kFull,      // mu_ij(1) = 1, so r_ij = 1
  kCrossing,  // mu_ij meets the diagonal inside (0, 1)
  kNone,      // the curve starts at 0, so r_ij = 0
};

struct PairResult {
  double resistibility = 0.0;
  // Invasion share where mu_ij(eps_bar) falls below eps_bar (1 for kFull,
  // 0 for kNone).
  double crossing = 0.0;
  double sf_at_zero = 0.0;
  Resistance kind = Resistance::kNone;
  // Located from the affine root of the center gap rather than by bisection.
  bool analytic = false;
};

// sup over eps_bar in (0, 1] of min(mu_ij(eps_bar), eps_bar), with details.
PairResult analyze_pair(const SymGame& g, std::size_t i, std::size_t j, const SFConfig& cfg = {});
double resistibility(const SymGame& g, std::size_t i, std::size_t j, const SFConfig& cfg = {});

struct CurvePoint {
  double eps = 0.0;
  double sf = 0.0;
  double mu = 0.0;
  double min_mu_eps = 0.0;
};

// The curve, its running infimum and the decision-rule curve at `points`
// evenly spaced eps in [0, 1]. mu at eps = 0 is reported as the curve's value
// there.
std::vector<CurvePoint> trace_pair(const SymGame& g, std::size_t i, std::size_t j, int points,
                                   const SFConfig& cfg = {});

struct EssReport {
  std::vector<std::string> strategies;
  std::vector<double> memberships;
  // resistibility[i][j] = r_ij; the diagonal is NaN.
  std::vector<std::vector<double>> resistibility;
  // Strategy indices by descending membership; equal memberships keep index
  // order.
  std::vector<std::size_t> ranking;
  std::vector<std::vector<PairResult>> diagnostics;

  // memberships[i] == min over j != i of resistibility[i][j], all in [0, 1].
  bool consistent() const;
};

EssReport fuzzy_ess(const SymGame& g, const SFConfig& cfg = {});

struct CrispEssResult {
  std::vector<bool> is_ess;
  // Supremum invasion barrier of i against j; nullopt when no barrier exists.
  // The diagonal is nullopt.
  std::vector<std::vector<std::optional<double>>> barrier;
  // Degree the fuzzy pipeline must reproduce: the barrier, 0.5 when both
  // expected payoffs coincide for every eps, otherwise 0. Diagonal NaN.
  std::vector<std::vector<double>> reduction;
  EssReport pipeline;
  bool pipeline_agrees = false;
};

// Classic ESS test straight from the invasion inequality, cross-checked
// against fuzzy_ess on the same game. Throws std::invalid_argument if any
// payoff is fuzzy.
CrispEssResult crisp_ess_check(const SymGame& g, const SFConfig& cfg = {});

}  // namespace fuzzyess
