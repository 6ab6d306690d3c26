#pragma once

#include <optional>
#include <vector>

#include "fansub/search.hpp"

namespace fansub {

struct FeasibilitySample {
  double v_gap = 0.0;
  bool feasible = false;
};

struct ThresholdReport {
  double T = 0.0;  // two-shock threshold
  std::optional<double> vbar_estimate;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  std::vector<FeasibilitySample> samples;  // in probe order
};

/// sqrt((rho_plus - rho_minus)(p(rho_plus) - p(rho_minus))/(rho_plus rho_minus)).
/// Symmetric under swapping the densities; zero iff they are equal.
double two_shock_threshold(const Eos& eos, double rho_minus, double rho_plus);

/// Estimates the lower feasibility threshold Vbar for the normal-velocity gap
/// g = v_-2 - v_+2 by bisection on the predicate "search finds a certified
/// subsolution at gap g". First confirms feasibility at T - delta for
/// delta in T*{1e-3, 1e-2, 5e-2} (throws NumericError if all fail), then
/// bisects on (0, that gap) down to bisect_tol. The estimate is the smallest
/// feasible gap found, an upper bound on the true onset for this search
/// policy; all probes are retained in samples so non-monotone feasibility is
/// visible. Requires rho_minus != rho_plus.
ThresholdReport estimate_vbar(const Eos& eos, double rho_minus, double rho_plus,
                              const std::array<double, 2>& v_plus,
                              double v_minus_1, double bisect_tol,
                              const std::vector<double>& eps1_grid = default_eps1_grid(),
                              const Tolerances& tol = {});

}  // namespace fansub
