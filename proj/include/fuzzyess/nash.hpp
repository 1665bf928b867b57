#pragma once

#include <cstddef>
#include <vector>

#include "fuzzyess/ess.hpp"
#include "fuzzyess/game.hpp"
#include "fuzzyess/satisfaction.hpp"

namespace fuzzyess {

struct NashReport {
  // degrees[r][c]: degree to which (row r, column c) is a Nash equilibrium.
  std::vector<std::vector<double>> degrees;
  // degrees[i][i] when the game is symmetric, otherwise empty.
  std::vector<double> symmetric_degrees;
};

// For each pure profile, the minimum over both players and every unilateral
// deviation of SF(payoff at the profile > payoff after deviating). A player
// with a single strategy contributes nothing (empty minimum = 1).
NashReport fuzzy_nash(const BiGame& g, const SFConfig& cfg = {});

// min over j != i of SF(payoff(i, i) > payoff(j, i)); equals the diagonal of
// fuzzy_nash(symmetrize(g)).
std::vector<double> symmetric_nash_degrees(const SymGame& g, const SFConfig& cfg = {});

struct ContainmentCheck {
  std::vector<double> nash;        // mu_Nash(s_i, s_i)
  std::vector<double> ess;         // fuzzy ESS membership of s_i
  bool holds = true;               // nash[i] >= ess[i] - tolerance for all i
  double worst_margin = 0.0;       // min over i of nash[i] - ess[i]
  EssReport ess_report;
};

// Checks that the fuzzy symmetric-NE set contains the fuzzy ESS set. A
// violation is reported through `holds`, never thrown.
ContainmentCheck verify_theorem1(const SymGame& g, const SFConfig& cfg = {});

}  // namespace fuzzyess
