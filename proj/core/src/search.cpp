#include "fansub/search.hpp"

#include <sstream>

#include "fansub/errors.hpp"

namespace fansub {

SearchResult search(const Eos& eos, const RiemannData& data,
                    const std::vector<double>& eps1_grid,
                    const Tolerances& tol) {
  SearchResult out;

  double rho1_guess, beta_guess;
  try {
    data.validate();
    const WaveFan fan = solve_riemann(data);
    if (fan.vacuum || !fan.middle_density) {
      out.diagnostics.push_back({0.0, "seed", "vacuum regime, no classical middle state"});
      return out;
    }
    rho1_guess = *fan.middle_density;
    beta_guess = *fan.middle_normal_velocity;
  } catch (const std::exception& e) {
    out.diagnostics.push_back({0.0, "seed", e.what()});
    return out;
  }

  for (double eps1 : eps1_grid) {
    ReducedRoot root;
    try {
      root = solve_reduced(eos, data, eps1, rho1_guess, beta_guess);
    } catch (const std::exception& e) {
      out.diagnostics.push_back({eps1, "solve", e.what()});
      continue;
    }
    rho1_guess = root.rho1;
    beta_guess = root.beta;

    Eps2Interval interval;
    try {
      interval = eps2_interval(eos, data, root.rho1, root.beta, eps1);
    } catch (const std::exception& e) {
      out.diagnostics.push_back({eps1, "interval", e.what()});
      continue;
    }
    if (interval.empty()) {
      std::ostringstream os;
      os << "empty eps2 interval, lo=" << interval.lo << " hi=" << interval.hi;
      out.diagnostics.push_back({eps1, "interval", os.str()});
      continue;
    }

    AnsatzPoint point;
    point.rho1 = root.rho1;
    point.beta = root.beta;
    point.nu_minus = root.nu_minus;
    point.nu_plus = root.nu_plus;
    point.eps1 = eps1;
    point.eps2 = pick_eps2(interval);

    FanSubsolution sub;
    try {
      sub = assemble(eos, data, point);
    } catch (const std::exception& e) {
      out.diagnostics.push_back({eps1, "assemble", e.what()});
      continue;
    }

    const Certificate cert = certify(eos, sub, data, tol);
    if (cert.pass) {
      out.hits.push_back({point, sub, cert});
    } else {
      double worst_margin = cert.subsolution_margins[0];
      for (double m : cert.subsolution_margins) worst_margin = std::min(worst_margin, m);
      worst_margin = std::min({worst_margin, cert.admissibility_margins[0],
                               cert.admissibility_margins[2]});
      std::ostringstream os;
      os << "certification failed, ordering_ok=" << cert.ordering_ok
         << " worst strict margin=" << worst_margin;
      out.diagnostics.push_back({eps1, "certify", os.str()});
    }
  }

  return out;
}

}  // namespace fansub
