#include "fansub/subsolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fansub/errors.hpp"

namespace fansub {

namespace {

void require_nonsingular(double rho1, double rho_outer, const char* side) {
  if (std::abs(rho1 - rho_outer) <= 1e-14 * std::max(std::abs(rho1), std::abs(rho_outer)))
    throw SingularEliminationError(
        std::string("reduced system: rho1 coincides with rho_") + side +
        ", nu-elimination is singular");
}

}  // namespace

ReducedResidual reduced_residual(const Eos& eos, const RiemannData& data,
                                 double rho1, double beta, double eps1) {
  require_positive_density(rho1, "reduced_residual");
  require_nonsingular(rho1, data.rho_minus, "minus");
  require_nonsingular(rho1, data.rho_plus, "plus");

  const double p1 = pressure(eos, rho1);
  const double pm = pressure(eos, data.rho_minus);
  const double pp = pressure(eos, data.rho_plus);
  const double vm2 = data.v_minus[1];
  const double vp2 = data.v_plus[1];

  const double jl = data.rho_minus * vm2 - rho1 * beta;
  const double jr = rho1 * beta - data.rho_plus * vp2;

  ReducedResidual r;
  r.left = jl * jl / (data.rho_minus - rho1) -
           (data.rho_minus * vm2 * vm2 - rho1 * (beta * beta + eps1) + pm - p1);
  r.right = jr * jr / (rho1 - data.rho_plus) -
            (rho1 * (beta * beta + eps1) - data.rho_plus * vp2 * vp2 + p1 - pp);
  return r;
}

namespace {

struct Jacobian {
  double a11, a12, a21, a22;
  double det() const { return a11 * a22 - a12 * a21; }
};

Jacobian analytic_jacobian(const Eos& eos, const RiemannData& data,
                           double rho1, double beta, double eps1) {
  const double dp1 = pressure_derivative(eos, rho1);
  const double vm2 = data.v_minus[1];
  const double vp2 = data.v_plus[1];
  const double jl = data.rho_minus * vm2 - rho1 * beta;
  const double jr = rho1 * beta - data.rho_plus * vp2;
  const double dl = data.rho_minus - rho1;
  const double dr = rho1 - data.rho_plus;
  const double k = beta * beta + eps1;

  Jacobian J;
  J.a11 = (-2.0 * beta * jl * dl + jl * jl) / (dl * dl) + k + dp1;
  J.a12 = -2.0 * rho1 * jl / dl + 2.0 * rho1 * beta;
  J.a21 = (2.0 * beta * jr * dr - jr * jr) / (dr * dr) - k - dp1;
  J.a22 = 2.0 * rho1 * jr / dr - 2.0 * rho1 * beta;
  return J;
}

Jacobian fd_jacobian(const Eos& eos, const RiemannData& data, double rho1,
                     double beta, double eps1) {
  const double hr = 1e-7 * std::max(1.0, std::abs(rho1));
  const double hb = 1e-7 * std::max(1.0, std::abs(beta));
  const auto r0 = reduced_residual(eos, data, rho1, beta, eps1);
  const auto rr = reduced_residual(eos, data, rho1 + hr, beta, eps1);
  const auto rb = reduced_residual(eos, data, rho1, beta + hb, eps1);
  return {(rr.left - r0.left) / hr, (rb.left - r0.left) / hb,
          (rr.right - r0.right) / hr, (rb.right - r0.right) / hb};
}

double norm_inf(const ReducedResidual& r) {
  return std::max(std::abs(r.left), std::abs(r.right));
}

bool same_side(double rho1, const RiemannData& data, int side_minus, int side_plus) {
  const int sm = rho1 > data.rho_minus ? 1 : -1;
  const int sp = rho1 > data.rho_plus ? 1 : -1;
  return rho1 > 0.0 && sm == side_minus && sp == side_plus;
}

}  // namespace

ReducedRoot solve_reduced(const Eos& eos, const RiemannData& data, double eps1,
                          double rho1_guess, double beta_guess) {
  data.validate();
  constexpr double tol = 1e-11;
  constexpr int max_iter = 50;

  double rho1 = rho1_guess, beta = beta_guess;
  const int side_minus = rho1 > data.rho_minus ? 1 : -1;
  const int side_plus = rho1 > data.rho_plus ? 1 : -1;

  ReducedResidual r = reduced_residual(eos, data, rho1, beta, eps1);
  for (int it = 0; it < max_iter; ++it) {
    if (norm_inf(r) <= tol) {
      ReducedRoot root;
      root.rho1 = rho1;
      root.beta = beta;
      root.nu_minus = (data.rho_minus * data.v_minus[1] - rho1 * beta) /
                      (data.rho_minus - rho1);
      root.nu_plus = (rho1 * beta - data.rho_plus * data.v_plus[1]) /
                     (rho1 - data.rho_plus);
      return root;
    }

    Jacobian J = analytic_jacobian(eos, data, rho1, beta, eps1);
    double scale = std::max({std::abs(J.a11) * std::abs(J.a22),
                             std::abs(J.a12) * std::abs(J.a21), 1e-300});
    if (!std::isfinite(J.det()) || std::abs(J.det()) <= 1e-14 * scale)
      J = fd_jacobian(eos, data, rho1, beta, eps1);
    scale = std::max({std::abs(J.a11) * std::abs(J.a22),
                      std::abs(J.a12) * std::abs(J.a21), 1e-300});
    if (!std::isfinite(J.det()) || std::abs(J.det()) <= 1e-14 * scale) {
      std::ostringstream os;
      os << "solve_reduced: singular Jacobian at rho1=" << rho1 << " beta=" << beta
         << " eps1=" << eps1;
      throw NumericError(os.str(), norm_inf(r));
    }

    const double drho = (-r.left * J.a22 + r.right * J.a12) / J.det();
    const double dbeta = (-r.right * J.a11 + r.left * J.a21) / J.det();

    // Damped step: stay on the guess's side of the outer densities, then
    // insist on residual decrease.
    double t = 1.0;
    double rho1_new = rho1, beta_new = beta;
    ReducedResidual r_new = r;
    bool accepted = false;
    for (int k = 0; k < 40; ++k, t *= 0.5) {
      rho1_new = rho1 + t * drho;
      beta_new = beta + t * dbeta;
      if (!same_side(rho1_new, data, side_minus, side_plus)) continue;
      try {
        r_new = reduced_residual(eos, data, rho1_new, beta_new, eps1);
      } catch (const SingularEliminationError&) {
        continue;
      }
      if (norm_inf(r_new) < norm_inf(r) || t <= 1e-6) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      std::ostringstream os;
      os << "solve_reduced: no admissible Newton step from rho1=" << rho1
         << " beta=" << beta << " eps1=" << eps1;
      throw NumericError(os.str(), norm_inf(r));
    }
    rho1 = rho1_new;
    beta = beta_new;
    r = r_new;
  }

  std::ostringstream os;
  os << "solve_reduced: no convergence in " << max_iter
     << " iterations, last iterate rho1=" << rho1 << " beta=" << beta
     << " eps1=" << eps1;
  throw NumericError(os.str(), norm_inf(r));
}

namespace {

/// p(a) + p(b) - 2ab (eps(a) - eps(b))/(a - b); symmetric in (a, b) and
/// invariant under the internal-energy gauge.
double pressure_energy_combination(const Eos& eos, double a, double b) {
  return pressure(eos, a) + pressure(eos, b) -
         2.0 * a * b * (internal_energy(eos, a) - internal_energy(eos, b)) / (a - b);
}

}  // namespace

Eps2Interval eps2_interval(const Eos& eos, const RiemannData& data,
                           double rho1, double beta, double eps1) {
  require_positive_density(rho1, "eps2_interval");
  require_nonsingular(rho1, data.rho_minus, "minus");
  require_nonsingular(rho1, data.rho_plus, "plus");

  const double vm2 = data.v_minus[1];
  const double vp2 = data.v_plus[1];

  // Left interface: (beta - v_-2) G(rho_-, rho1)
  //   <= eps1 rho1 (v_-2 + beta) - (eps1 + eps2) KL.
  const double kl = data.rho_minus * rho1 * (beta - vm2) / (data.rho_minus - rho1);
  const double gl = pressure_energy_combination(eos, data.rho_minus, rho1);
  Eps2Interval out;
  out.left.coeff = kl;
  out.left.bound = eps1 * rho1 * (vm2 + beta) - eps1 * kl - (beta - vm2) * gl;

  // Right interface: (v_+2 - beta) G(rho1, rho_+)
  //   <= -eps1 rho1 (v_+2 + beta) + (eps1 + eps2) KR.
  const double kr = rho1 * data.rho_plus * (vp2 - beta) / (rho1 - data.rho_plus);
  const double gr = pressure_energy_combination(eos, rho1, data.rho_plus);
  out.right.coeff = -kr;
  out.right.bound = -eps1 * rho1 * (vp2 + beta) + eps1 * kr - (vp2 - beta) * gr;

  for (const AffineConstraint& c : {out.left, out.right}) {
    if (c.coeff > 0.0)
      out.hi = std::min(out.hi, c.bound / c.coeff);
    else if (c.coeff < 0.0)
      out.lo = std::max(out.lo, c.bound / c.coeff);
    else if (c.bound < 0.0)
      out.unsatisfiable = true;
  }
  return out;
}

double pick_eps2(const Eps2Interval& interval) {
  if (interval.empty())
    throw DomainError("pick_eps2: empty eps2 interval");
  if (std::isinf(interval.hi)) return interval.lo + 1.0;
  return 0.5 * (interval.lo + interval.hi);
}

FanSubsolution assemble(const Eos& eos, const RiemannData& data,
                        const AnsatzPoint& point) {
  (void)eos;
  data.validate();
  require_positive_density(point.rho1, "assemble");
  if (!(point.eps1 > 0.0) || !(point.eps2 > 0.0))
    throw DomainError("assemble: eps1 and eps2 must be positive");
  if (!(point.nu_minus < point.beta && point.beta < point.nu_plus)) {
    std::ostringstream os;
    os << "assemble: fan ordering violated, nu_minus=" << point.nu_minus
       << " beta=" << point.beta << " nu_plus=" << point.nu_plus;
    throw OrderingError(os.str());
  }

  const double vm1 = data.v_minus[0];
  const double vp1 = data.v_plus[0];
  const double c1 = vm1 * vm1 + point.beta * point.beta + point.eps1 + point.eps2;
  const double c2 = vp1 * vp1 + point.beta * point.beta + point.eps1 + point.eps2;
  const double g1 = 0.5 * c1 - point.beta * point.beta - point.eps1;
  const double g2 = g1 - 0.5 * c1 + 0.5 * c2;

  FanSubsolution sub;
  sub.partition = {point.nu_minus, point.beta, point.nu_plus};
  sub.outer_minus = {data.rho_minus, data.v_minus};
  sub.outer_plus = {data.rho_plus, data.v_plus};
  sub.region1 = {point.rho1, {vm1, point.beta}, {g1, vm1 * point.beta}, c1};
  sub.region2 = {point.rho1, {vp1, point.beta}, {g2, vp1 * point.beta}, c2};
  return sub;
}

std::vector<double> geometric_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0) || n < 1)
    throw DomainError("geometric_grid: requires lo, hi > 0 and n >= 1");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    grid.push_back(lo);
    return grid;
  }
  const double ratio = std::pow(hi / lo, 1.0 / (n - 1));
  double x = lo;
  for (int k = 0; k < n; ++k, x *= ratio) grid.push_back(x);
  grid.back() = hi;
  return grid;
}

std::vector<double> default_eps1_grid() { return geometric_grid(1e-8, 1e-1, 16); }

}  // namespace fansub
