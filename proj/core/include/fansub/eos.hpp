#pragma once

#include <cmath>
#include <string>

#include "fansub/errors.hpp"

namespace fansub {

/// Polytropic equation of state p(rho) = rho^gamma with gamma >= 1.
///
/// The internal energy density eps(rho) solves p(r) = r^2 eps'(r); its
/// integration constant is fixed to 0 in both branches. The gamma = 1 branch
/// (eps = ln rho) is selected by exact comparison, never by tolerance.
///
/// energy_offset adds a constant to eps(rho). Whenever the mass
/// Rankine-Hugoniot relations hold, every admissibility verdict is invariant
/// under this shift; the field exists so that tests can exercise the gauge.
struct Eos {
  explicit Eos(double gamma_, double energy_offset_ = 0.0)
      : gamma(gamma_), energy_offset(energy_offset_) {
    if (!(gamma >= 1.0) || !std::isfinite(gamma))
      throw DomainError("Eos: gamma must be a finite real >= 1");
  }

  double gamma;
  double energy_offset;
};

inline void require_positive_density(double rho, const char* where) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw DomainError(std::string(where) + ": density must be positive, got " +
                      std::to_string(rho));
}

/// p(rho) = rho^gamma.
inline double pressure(const Eos& eos, double rho) {
  require_positive_density(rho, "pressure");
  return std::pow(rho, eos.gamma);
}

/// p'(rho) = gamma rho^(gamma - 1).
inline double pressure_derivative(const Eos& eos, double rho) {
  require_positive_density(rho, "pressure_derivative");
  return eos.gamma * std::pow(rho, eos.gamma - 1.0);
}

/// eps(rho) = rho^(gamma-1)/(gamma-1) for gamma > 1, ln(rho) for gamma = 1.
inline double internal_energy(const Eos& eos, double rho) {
  require_positive_density(rho, "internal_energy");
  if (eos.gamma == 1.0) return std::log(rho) + eos.energy_offset;
  return std::pow(rho, eos.gamma - 1.0) / (eos.gamma - 1.0) + eos.energy_offset;
}

/// c(rho) = sqrt(p'(rho)) = sqrt(gamma) rho^((gamma-1)/2).
inline double sound_speed(const Eos& eos, double rho) {
  require_positive_density(rho, "sound_speed");
  return std::sqrt(eos.gamma) * std::pow(rho, 0.5 * (eos.gamma - 1.0));
}

}  // namespace fansub
