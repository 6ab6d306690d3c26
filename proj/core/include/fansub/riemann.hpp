#pragma once

#include <array>
#include <optional>
#include <string>

#include "fansub/eos.hpp"

namespace fansub {

/// Riemann initial data: two constant states separated by the line x2 = 0,
/// (rho_minus, v_minus) below and (rho_plus, v_plus) above. v = (v1, v2)
/// with v1 tangential and v2 normal to the interface.
struct RiemannData {
  double rho_minus = 1.0;
  double rho_plus = 1.0;
  std::array<double, 2> v_minus{0.0, 0.0};
  std::array<double, 2> v_plus{0.0, 0.0};
  double gamma = 2.0;

  Eos eos() const { return Eos(gamma); }

  /// Throws DomainError unless densities are positive, gamma >= 1 and all
  /// entries are finite.
  void validate() const;
};

enum class WaveKind { None, Shock, Rarefaction };

/// One outer wave of the self-similar fan. A shock propagates at a single
/// speed (stored in both slots); a rarefaction spans [speed_lo, speed_hi].
struct Wave {
  WaveKind kind = WaveKind::None;
  double speed_lo = 0.0;
  double speed_hi = 0.0;
};

/// Self-similar BV solution of the planar Riemann problem: left wave,
/// contact discontinuity, right wave around a constant middle state.
/// In the vacuum regime there is no middle state and both waves are
/// rarefactions opening onto a vacuum wedge.
struct WaveFan {
  Wave left;
  Wave right;
  bool contact = false;        // present iff v_minus[0] != v_plus[0]
  double contact_speed = 0.0;  // equals the middle normal velocity
  bool vacuum = false;
  std::optional<double> middle_density;
  std::optional<double> middle_normal_velocity;
};

/// Wave-pattern label of a solved fan: SS / SR / RS / RR / vacuum / none,
/// each with or without contact.
struct PatternLabel {
  WaveKind left = WaveKind::None;
  WaveKind right = WaveKind::None;
  bool contact = false;
  bool vacuum = false;

  std::string str() const;  // e.g. "SS+contact", "RR", "vacuum", "none"
};

/// Magnitude of the normal-velocity jump across an admissible shock joining
/// densities rho0 and rho: sqrt((rho - rho0)(p(rho) - p(rho0))/(rho rho0)).
/// Symmetric in its density arguments; zero at rho == rho0.
double shock_jump(const Eos& eos, double rho0, double rho);

/// Velocity change along the rarefaction curve from rho0 down to rho <= rho0:
/// integral of sqrt(p'(r))/r over [rho, rho0]. Requires rho <= rho0.
double rarefaction_jump(const Eos& eos, double rho0, double rho);

/// Velocity separation the rarefaction from rho down to vacuum can absorb:
/// 2 sqrt(gamma)/(gamma-1) rho^((gamma-1)/2) for gamma > 1, +inf for gamma = 1.
double rarefaction_capacity(const Eos& eos, double rho);

/// Wave-curve function of one side: shock_jump(rho_side, rho_m) for
/// rho_m > rho_side, -rarefaction_jump(rho_side, rho_m) otherwise.
/// Strictly increasing in rho_m, zero at rho_m == rho_side.
double wave_curve(const Eos& eos, double rho_side, double rho_m);

/// d/d(rho_m) of wave_curve. Continuous across rho_m == rho_side.
double wave_curve_derivative(const Eos& eos, double rho_side, double rho_m);

/// Solves the Riemann problem: finds the middle state from
/// W_left(rho_m) + W_right(rho_m) = v_minus2 - v_plus2 by bracketed
/// bisection refined by Newton (absolute residual tolerance 1e-12), then
/// assembles waves, speeds and the contact. Throws NumericError with the
/// bracket and residual if the root finder fails.
WaveFan solve_riemann(const RiemannData& data);

/// Pattern label of solve_riemann(data).
PatternLabel classify(const RiemannData& data);

/// Label of an already-solved fan.
PatternLabel label_of(const WaveFan& fan);

}  // namespace fansub
