#pragma once

#include <cstddef>

#include "fuzzyess/fuzzy.hpp"

namespace fuzzyess {

enum class TNorm { kProduct, kMin };
enum class SfMode { kExact, kGrid };

// Every numeric knob of the solver lives here so tests can tighten them in
// one place.
struct SFConfig {
  TNorm tnorm = TNorm::kProduct;
  SfMode mode = SfMode::kExact;
  // Points per axis of the 2D quadrature used in grid mode.
  int grid_resolution = 2048;
  double tolerance = 1e-9;

  // Uniform samples of the mutant share over (0, 1] used for the infimum.
  int eps_resolution = 2048;
  // Absolute tolerance of the crossing bisection.
  double crossing_tolerance = 1e-6;
  // Floating-point slack allowed by the fuzzy-NE >= fuzzy-ESS containment check.
  double containment_tolerance = 1e-6;
  // Worker threads for per-pair evaluation; 0 picks the hardware concurrency.
  unsigned threads = 1;

  // Throws std::invalid_argument on an unusable combination (resolution
  // below 64, exact mode with the min T-norm, non-positive tolerances).
  void validate() const;
};

// Numerator and denominator of SF(A > B) for two non-crisp operands under the
// product T-norm, integrated in closed form.
struct SatisfactionIntegrals {
  double greater = 0.0;  // integral of mu_A(x) mu_B(y) over x > y
  double less = 0.0;     // integral of mu_A(x) mu_B(y) over x < y
  double total() const noexcept { return greater + less; }
};
SatisfactionIntegrals satisfaction_integrals(const TriFuzzy& a, const TriFuzzy& b);

// Truth degree that `a` exceeds `b`. Crisp pairs use the step rule
// (1 / 0.5 / 0); a crisp operand facing a fuzzy one acts as a point mass.
double sf_greater(const TriFuzzy& a, const TriFuzzy& b, const SFConfig& cfg = {});
// 1 - sf_greater(a, b); crisp ties give 0.5.
double sf_less(const TriFuzzy& a, const TriFuzzy& b, const SFConfig& cfg = {});

// Direct 2D midpoint Riemann sum over the product of supports, product
// T-norm. Requires resolution >= 64 and at least one non-crisp operand.
double sf_greater_oracle(const TriFuzzy& a, const TriFuzzy& b, int resolution);

// Same Riemann sum with a selectable T-norm; this backs grid mode.
double sf_greater_grid(const TriFuzzy& a, const TriFuzzy& b, int resolution, TNorm tnorm);

}  // namespace fuzzyess
