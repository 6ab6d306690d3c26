#pragma once

#include <limits>
#include <vector>

#include "fansub/riemann.hpp"

namespace fansub {

/// Partition of the half-plane t > 0 into four wedges by the lines
/// x2 = nu_minus t, x2 = nu_1 t, x2 = nu_plus t.
struct FanPartition {
  double nu_minus = 0.0;
  double nu_1 = 0.0;
  double nu_plus = 0.0;

  bool ordered() const { return nu_minus < nu_1 && nu_1 < nu_plus; }
};

/// Traceless symmetric 2x2 matrix [[g, d], [d, -g]].
struct TracelessSym2 {
  double g = 0.0;  // (1,1) entry
  double d = 0.0;  // off-diagonal entry
};

struct OuterState {
  double rho = 1.0;
  std::array<double, 2> v{0.0, 0.0};
};

/// Constant state of one middle wedge: density, velocity (alpha_i, beta_i),
/// traceless part u_i of the momentum flux, and the kinetic bound C_i on |v|^2.
struct RegionState {
  double rho = 1.0;
  std::array<double, 2> v{0.0, 0.0};
  TracelessSym2 u;
  double C = 0.0;
};

/// Piecewise-constant fan subsolution. On the outer wedges the traceless
/// flux u_pm = v_pm (x) v_pm - |v_pm|^2/2 Id is implied by the outer states
/// and is not stored.
struct FanSubsolution {
  FanPartition partition;
  OuterState outer_minus;
  OuterState outer_plus;
  RegionState region1;
  RegionState region2;
};

/// Reduced unknowns of the two-wedge ansatz: common middle density rho1,
/// common normal velocity beta (= contact speed nu_1), outer interface
/// slopes, and the slack variables eps1, eps2 of the matrix inequalities.
struct AnsatzPoint {
  double rho1 = 1.0;
  double beta = 0.0;
  double nu_minus = 0.0;
  double nu_plus = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
};

struct ReducedResidual {
  double left = 0.0;
  double right = 0.0;
};

/// Residuals of the reduced normal-momentum relations after eliminating
/// nu_minus = (rho_- v_-2 - rho1 beta)/(rho_- - rho1) and
/// nu_plus  = (rho1 beta - rho_+ v_+2)/(rho1 - rho_+):
///   left  = (rho_- v_-2 - rho1 beta)^2/(rho_- - rho1)
///           - [rho_- v_-2^2 - rho1 (beta^2 + eps1) + p(rho_-) - p(rho1)]
///   right = (rho1 beta - rho_+ v_+2)^2/(rho1 - rho_+)
///           - [rho1 (beta^2 + eps1) - rho_+ v_+2^2 + p(rho1) - p(rho_+)]
/// Throws SingularEliminationError when rho1 matches an outer density to
/// 1e-14 relative.
ReducedResidual reduced_residual(const Eos& eos, const RiemannData& data,
                                 double rho1, double beta, double eps1);

struct ReducedRoot {
  double rho1 = 0.0;
  double beta = 0.0;
  double nu_minus = 0.0;
  double nu_plus = 0.0;
};

/// Newton iteration on reduced_residual from the given guess, to absolute
/// residual <= 1e-11. Uses the analytic 2x2 Jacobian with a finite-difference
/// fallback (step 1e-7 max(1,|x|)); steps are damped so iterates stay on the
/// guess's side of the outer densities. Throws NumericError (carrying the
/// last iterate in the message and the residual) after 50 iterations or on a
/// singular Jacobian.
ReducedRoot solve_reduced(const Eos& eos, const RiemannData& data, double eps1,
                          double rho1_guess, double beta_guess);

/// One interface admissibility inequality written as coeff * eps2 <= bound.
struct AffineConstraint {
  double coeff = 0.0;
  double bound = 0.0;
};

/// Feasible eps2 range: the two affine interface constraints intersected
/// with (0, inf). hi may be +inf; empty() reports an empty interval.
struct Eps2Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool unsatisfiable = false;  // a zero-coefficient constraint failed outright
  AffineConstraint left;       // raw constraint from the left interface
  AffineConstraint right;      // raw constraint from the right interface

  bool empty() const { return unsatisfiable || !(lo < hi); }
};

/// Derives the feasible eps2 interval from the two interface admissibility
/// inequalities of the reduced system, each affine in eps2. Throws
/// SingularEliminationError when rho1 matches an outer density.
Eps2Interval eps2_interval(const Eos& eos, const RiemannData& data,
                           double rho1, double beta, double eps1);

/// Midpoint policy for picking eps2 from a non-empty interval; when the
/// interval is unbounded above returns lo + 1.
double pick_eps2(const Eps2Interval& interval);

/// Builds the full piecewise-constant subsolution from an ansatz point:
///   alpha1 = v_-1, alpha2 = v_+1, rho2 = rho1, beta1 = beta2 = nu_1 = beta,
///   C_i = v_(pm)1^2 + beta^2 + eps1 + eps2,
///   gamma1 = C1/2 - beta^2 - eps1, gamma2 = gamma1 - C1/2 + C2/2,
///   delta_i = v_(pm)1 * beta.
/// Throws OrderingError unless nu_minus < beta < nu_plus, DomainError on
/// non-positive eps1/eps2/rho1.
FanSubsolution assemble(const Eos& eos, const RiemannData& data,
                        const AnsatzPoint& point);

/// Default continuation grid: 16 geometric points on [1e-8, 1e-1].
std::vector<double> default_eps1_grid();

/// Geometric grid with n points from lo to hi (n >= 1; lo, hi > 0).
std::vector<double> geometric_grid(double lo, double hi, int n);

}  // namespace fansub
