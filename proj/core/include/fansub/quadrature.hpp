#pragma once

#include <utility>
#include <vector>

namespace fansub {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

/// Composite quadrature of f over [a, b]: nsub equal subintervals, the given
/// kernel rule on each.
template <class F>
double composite_gauss(F&& f, double a, double b, int nsub,
                       const GaussRule& rule) {
  if (!(b > a) || nsub < 1) return 0.0;
  const double h = (b - a) / nsub;
  double sum = 0.0;
  for (int k = 0; k < nsub; ++k) {
    const double mid = a + (k + 0.5) * h;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
      sum += rule.weights[j] * f(mid + 0.5 * h * rule.nodes[j]);
  }
  return 0.5 * h * sum;
}

}  // namespace fansub
