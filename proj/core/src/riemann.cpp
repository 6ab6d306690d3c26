#include "fansub/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fansub/errors.hpp"

namespace fansub {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(double x, const char* what) {
  if (!std::isfinite(x))
    throw DomainError(std::string("RiemannData: ") + what + " must be finite");
}

}  // namespace

void RiemannData::validate() const {
  require_positive_density(rho_minus, "RiemannData.rho_minus");
  require_positive_density(rho_plus, "RiemannData.rho_plus");
  if (!(gamma >= 1.0) || !std::isfinite(gamma))
    throw DomainError("RiemannData: gamma must be a finite real >= 1");
  require_finite(v_minus[0], "v_minus[0]");
  require_finite(v_minus[1], "v_minus[1]");
  require_finite(v_plus[0], "v_plus[0]");
  require_finite(v_plus[1], "v_plus[1]");
}

double shock_jump(const Eos& eos, double rho0, double rho) {
  require_positive_density(rho0, "shock_jump");
  require_positive_density(rho, "shock_jump");
  const double num = (rho - rho0) * (pressure(eos, rho) - pressure(eos, rho0));
  return std::sqrt(std::max(0.0, num / (rho * rho0)));
}

double rarefaction_jump(const Eos& eos, double rho0, double rho) {
  require_positive_density(rho0, "rarefaction_jump");
  require_positive_density(rho, "rarefaction_jump");
  if (rho > rho0)
    throw DomainError("rarefaction_jump: requires rho <= rho0");
  if (eos.gamma == 1.0) return std::log(rho0 / rho);
  const double e = 0.5 * (eos.gamma - 1.0);
  return std::sqrt(eos.gamma) / e * (std::pow(rho0, e) - std::pow(rho, e));
}

double rarefaction_capacity(const Eos& eos, double rho) {
  require_positive_density(rho, "rarefaction_capacity");
  if (eos.gamma == 1.0) return kInf;
  const double e = 0.5 * (eos.gamma - 1.0);
  return std::sqrt(eos.gamma) / e * std::pow(rho, e);
}

double wave_curve(const Eos& eos, double rho_side, double rho_m) {
  if (rho_m > rho_side) return shock_jump(eos, rho_side, rho_m);
  return -rarefaction_jump(eos, rho_side, rho_m);
}

double wave_curve_derivative(const Eos& eos, double rho_side, double rho_m) {
  require_positive_density(rho_side, "wave_curve_derivative");
  require_positive_density(rho_m, "wave_curve_derivative");
  if (rho_m > rho_side) {
    const double w = shock_jump(eos, rho_side, rho_m);
    if (w == 0.0) return sound_speed(eos, rho_m) / rho_m;
    const double dp = pressure(eos, rho_m) - pressure(eos, rho_side);
    const double dr = rho_m - rho_side;
    const double hp = (dp + dr * pressure_derivative(eos, rho_m)) / (rho_m * rho_side) -
                      dr * dp / (rho_m * rho_m * rho_side);
    return 0.5 * hp / w;
  }
  return sound_speed(eos, rho_m) / rho_m;
}

namespace {

/// Hybrid bracketed Newton/bisection for the monotone wave-curve equation.
double solve_middle_density(const Eos& eos, const RiemannData& d, double gap) {
  const auto f = [&](double rho) {
    return wave_curve(eos, d.rho_minus, rho) + wave_curve(eos, d.rho_plus, rho) - gap;
  };
  const auto fp = [&](double rho) {
    return wave_curve_derivative(eos, d.rho_minus, rho) +
           wave_curve_derivative(eos, d.rho_plus, rho);
  };

  double lo = std::min(d.rho_minus, d.rho_plus) * 1e-6;
  double hi = std::max(d.rho_minus, d.rho_plus) * 1e6;
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < 12 && flo > 0.0; ++i) { lo *= 1e-3; flo = f(lo); }
  for (int i = 0; i < 12 && fhi < 0.0; ++i) { hi *= 1e3; fhi = f(hi); }
  if (flo > 0.0 || fhi < 0.0) {
    std::ostringstream os;
    os << "solve_riemann: failed to bracket middle density, f(" << lo << ")="
       << flo << ", f(" << hi << ")=" << fhi;
    throw NumericError(os.str(), std::min(std::abs(flo), std::abs(fhi)), lo, hi);
  }

  constexpr double tol = 1e-12;
  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int it = 0; it < 200; ++it) {
    if (std::abs(fx) <= tol) return x;
    if (fx > 0.0) hi = x; else lo = x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * x) return x;
    const double deriv = fp(x);
    double next = x - fx / deriv;
    if (!(deriv > 0.0) || !(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    x = next;
    fx = f(x);
  }
  throw NumericError("solve_riemann: root refinement did not converge", fx, lo, hi);
}

}  // namespace

WaveFan solve_riemann(const RiemannData& data) {
  data.validate();
  const Eos eos = data.eos();
  const double gap = data.v_minus[1] - data.v_plus[1];

  WaveFan fan;
  fan.contact = data.v_minus[0] != data.v_plus[0];

  // Vacuum: the outgoing rarefactions cannot absorb the velocity separation.
  if (eos.gamma > 1.0) {
    const double cap = rarefaction_capacity(eos, data.rho_minus) +
                       rarefaction_capacity(eos, data.rho_plus);
    if (-gap >= cap) {
      fan.vacuum = true;
      fan.contact = false;
      fan.left = {WaveKind::Rarefaction,
                  data.v_minus[1] - sound_speed(eos, data.rho_minus),
                  data.v_minus[1] + rarefaction_capacity(eos, data.rho_minus)};
      fan.right = {WaveKind::Rarefaction,
                   data.v_plus[1] - rarefaction_capacity(eos, data.rho_plus),
                   data.v_plus[1] + sound_speed(eos, data.rho_plus)};
      return fan;
    }
  }

  double rho_m, vm2;
  if (data.rho_minus == data.rho_plus && gap == 0.0) {
    rho_m = data.rho_minus;
    vm2 = data.v_minus[1];
  } else {
    rho_m = solve_middle_density(eos, data, gap);
    vm2 = 0.5 * ((data.v_minus[1] - wave_curve(eos, data.rho_minus, rho_m)) +
                 (data.v_plus[1] + wave_curve(eos, data.rho_plus, rho_m)));
  }
  fan.middle_density = rho_m;
  fan.middle_normal_velocity = vm2;
  fan.contact_speed = vm2;

  if (rho_m > data.rho_minus) {
    const double sigma = (data.rho_minus * data.v_minus[1] - rho_m * vm2) /
                         (data.rho_minus - rho_m);
    fan.left = {WaveKind::Shock, sigma, sigma};
  } else if (rho_m < data.rho_minus) {
    fan.left = {WaveKind::Rarefaction,
                data.v_minus[1] - sound_speed(eos, data.rho_minus),
                vm2 - sound_speed(eos, rho_m)};
  }

  if (rho_m > data.rho_plus) {
    const double sigma =
        (rho_m * vm2 - data.rho_plus * data.v_plus[1]) / (rho_m - data.rho_plus);
    fan.right = {WaveKind::Shock, sigma, sigma};
  } else if (rho_m < data.rho_plus) {
    fan.right = {WaveKind::Rarefaction, vm2 + sound_speed(eos, rho_m),
                 data.v_plus[1] + sound_speed(eos, data.rho_plus)};
  }

  return fan;
}

PatternLabel label_of(const WaveFan& fan) {
  PatternLabel p;
  p.left = fan.left.kind;
  p.right = fan.right.kind;
  p.contact = fan.contact;
  p.vacuum = fan.vacuum;
  return p;
}

PatternLabel classify(const RiemannData& data) {
  return label_of(solve_riemann(data));
}

std::string PatternLabel::str() const {
  std::string s;
  if (vacuum) {
    s = "vacuum";
  } else if (left == WaveKind::None && right == WaveKind::None) {
    s = "none";
  } else {
    const auto letter = [](WaveKind k) {
      switch (k) {
        case WaveKind::Shock: return 'S';
        case WaveKind::Rarefaction: return 'R';
        default: return '-';
      }
    };
    s.push_back(letter(left));
    s.push_back(letter(right));
  }
  if (contact) s += "+contact";
  return s;
}

}  // namespace fansub
