#pragma once

#include <array>
#include <cstdint>

#include "fansub/subsolution.hpp"

namespace fansub {

struct Tolerances {
  double eq = 1e-9;       // relative tolerance on the interface equations
  double strict = 1e-10;  // scaled margin required of strict inequalities
};

/// Result of certifying a candidate against the defining equations and
/// inequalities of an admissible fan subsolution. Residuals and margins are
/// scaled by max(1, |LHS|, |RHS|) of the respective relation; eigen_margins
/// are the raw smallest eigenvalues of M_i = (C_i/2) Id - v_i (x) v_i + u_i.
struct Certificate {
  std::array<double, 9> rh_residuals{};          // cont/mom1/mom2 per interface
  std::array<double, 4> subsolution_margins{};   // trace1, trace2, det1, det2
  std::array<double, 3> admissibility_margins{}; // left, middle, right
  bool ordering_ok = false;
  std::array<double, 2> eigen_margins{};
  bool pass = false;
};

/// Raw residuals LHS - RHS of the nine interface Rankine-Hugoniot equations
/// (mass, tangential momentum, normal momentum on the left, middle and right
/// interfaces), evaluated in the general non-ansatz form.
std::array<double, 9> check_rh(const Eos& eos, const FanSubsolution& sub,
                               const RiemannData& data);

struct MatrixConditionReport {
  std::array<double, 4> algebraic{};  // C_i - |v_i|^2 and the det conditions
  std::array<double, 2> eigen{};      // smallest eigenvalue of M_i
};

/// Margins of the pointwise matrix inequality v_i (x) v_i - u_i < (C_i/2) Id
/// in both the trace/determinant form and the eigenvalue form.
MatrixConditionReport check_matrix_conditions(const FanSubsolution& sub);

/// Raw margins RHS - LHS (>= 0 required) of the three interface entropy
/// inequalities, middle interface included in full generality.
std::array<double, 3> check_admissibility(const Eos& eos,
                                          const FanSubsolution& sub,
                                          const RiemannData& data);

struct WeakFormReport {
  double max_eq_residual = 0.0;  // worst normalized equation residual
  double min_ineq_value = 0.0;   // worst normalized entropy-inequality value
};

/// Quadrature oracle: integrates the distributional forms of the relaxed
/// continuity/momentum equations (must vanish) and of the entropy inequality
/// (must be >= 0 for nonnegative test functions, initial-data term included)
/// against n_test random smooth bumps per family. Fields are x1-invariant,
/// so the quadrature is 2D in (x2, t), split into smoothness cells along the
/// interface lines x2 = nu t. Deterministic for a fixed seed.
/// Requires n_test >= 1 and quad_res >= 16.
WeakFormReport weak_form_residual(const Eos& eos, const FanSubsolution& sub,
                                  const RiemannData& data, int n_test,
                                  int quad_res, std::uint64_t seed);

/// Aggregates check_rh, check_matrix_conditions, check_admissibility and the
/// fan ordering into a Certificate. pass requires every scaled equation
/// residual <= tol.eq, every scaled strict margin >= tol.strict and
/// nu_minus < nu_1 < nu_plus. Reads only the FanSubsolution fields; outer
/// states are taken from data.
Certificate certify(const Eos& eos, const FanSubsolution& sub,
                    const RiemannData& data, const Tolerances& tol = {});

}  // namespace fansub
