#include "fansub/thresholds.hpp"

#include <cmath>
#include <sstream>

#include "fansub/errors.hpp"

namespace fansub {

double two_shock_threshold(const Eos& eos, double rho_minus, double rho_plus) {
  require_positive_density(rho_minus, "two_shock_threshold");
  require_positive_density(rho_plus, "two_shock_threshold");
  const double num = (rho_plus - rho_minus) *
                     (pressure(eos, rho_plus) - pressure(eos, rho_minus));
  return std::sqrt(std::max(0.0, num / (rho_plus * rho_minus)));
}

ThresholdReport estimate_vbar(const Eos& eos, double rho_minus, double rho_plus,
                              const std::array<double, 2>& v_plus,
                              double v_minus_1, double bisect_tol,
                              const std::vector<double>& eps1_grid,
                              const Tolerances& tol) {
  require_positive_density(rho_minus, "estimate_vbar");
  require_positive_density(rho_plus, "estimate_vbar");
  if (rho_minus == rho_plus)
    throw DomainError("estimate_vbar: requires rho_minus != rho_plus");
  if (!(bisect_tol > 0.0))
    throw DomainError("estimate_vbar: bisect_tol must be positive");

  ThresholdReport report;
  report.T = two_shock_threshold(eos, rho_minus, rho_plus);

  const auto feasible = [&](double gap) {
    RiemannData data;
    data.gamma = eos.gamma;
    data.rho_minus = rho_minus;
    data.rho_plus = rho_plus;
    data.v_plus = v_plus;
    data.v_minus = {v_minus_1, v_plus[1] + gap};
    const bool ok = search(eos, data, eps1_grid, tol).found();
    report.samples.push_back({gap, ok});
    return ok;
  };

  // Feasibility is guaranteed in a neighborhood below T; probe inward.
  double hi = -1.0;
  for (double delta : {1e-3 * report.T, 1e-2 * report.T, 5e-2 * report.T}) {
    if (feasible(report.T - delta)) {
      hi = report.T - delta;
      break;
    }
  }
  if (hi < 0.0) {
    std::ostringstream os;
    os << "estimate_vbar: no feasible gap found near T=" << report.T
       << " (probes at T*{1e-3,1e-2,5e-2}); numerical failure";
    throw NumericError(os.str(), report.T);
  }

  double lo = 0.0;
  while (hi - lo > bisect_tol) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }

  report.bracket_lo = lo;
  report.bracket_hi = hi;
  report.vbar_estimate = hi;
  return report;
}

}  // namespace fansub
