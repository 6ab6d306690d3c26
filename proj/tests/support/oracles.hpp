// Test-only oracles, independent of the library's solution paths.
#pragma once

#include <cmath>
#include <functional>
#include <random>

namespace oracles {

/// Plain bisection for a monotone increasing f with f(lo) < 0 < f(hi).
inline double bisect(const std::function<double(double)>& f, double lo,
                     double hi, double tol = 1e-14) {
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

/// Root > 1 of rho^3 - rho^2 - 2 rho + 1 = 0 (symmetric two-shock middle
/// density for gamma = 2, rho = 1, velocity gap 2).
inline double symmetric_cubic_root() {
  return bisect([](double r) { return ((r - 1.0) * r - 2.0) * r + 1.0; }, 1.0, 3.0);
}

/// Composite Simpson rule with n (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a,
                      double b, int n = 2000) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
  return sum * h / 3.0;
}

}  // namespace oracles
