#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "fansub/parallel.hpp"
#include "fansub/quadrature.hpp"
#include "fansub/subsolution.hpp"

using namespace fansub;

TEST_CASE("Gauss-Legendre rules have symmetric nodes and weights summing to 2") {
  for (int n : {1, 2, 3, 5, 8, 16}) {
    const GaussRule rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double wsum = 0.0;
    for (std::size_t i = 0; i < rule.weights.size(); ++i) {
      wsum += rule.weights[i];
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[rule.nodes.size() - 1 - i])
                                 .epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("an n-point rule integrates polynomials up to degree 2n-1 exactly") {
  for (int n : {2, 3, 4}) {
    const GaussRule rule = gauss_legendre(n);
    for (int degree = 0; degree <= 2 * n - 1; ++degree) {
      const double value = composite_gauss(
          [degree](double x) { return std::pow(x, degree); }, -0.3, 1.7, 1, rule);
      const double exact = (std::pow(1.7, degree + 1) - std::pow(-0.3, degree + 1)) /
                           (degree + 1);
      CHECK(value == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("composite refinement converges for a non-polynomial integrand") {
  const GaussRule rule = gauss_legendre(2);
  const auto f = [](double x) { return std::exp(-x) * std::sin(3 * x); };
  const double exact = 0.3 * (1.0 + std::exp(-M_PI));  // int_0^pi e^-x sin 3x dx
  const double coarse = std::abs(composite_gauss(f, 0.0, M_PI, 4, rule) - exact);
  const double fine = std::abs(composite_gauss(f, 0.0, M_PI, 8, rule) - exact);
  CHECK(fine < coarse / 8.0);
}

TEST_CASE("parallel_for runs every index once, also with a multi-thread pool") {
  setenv("FANSUB_THREADS", "4", 1);
  CHECK(max_threads() == 4);
  std::atomic<long> sum{0};
  std::vector<std::atomic<int>> counts(257);
  parallel_for(257, [&](std::size_t i) {
    counts[i].fetch_add(1);
    sum.fetch_add(static_cast<long>(i));
  });
  for (auto& c : counts) CHECK(c.load() == 1);
  CHECK(sum.load() == 256 * 257 / 2);

  unsetenv("FANSUB_THREADS");
  std::atomic<int> n{0};
  parallel_for(5, [&](std::size_t) { n.fetch_add(1); });
  CHECK(n.load() == 5);
}

TEST_CASE("parallel_for propagates exceptions from workers") {
  setenv("FANSUB_THREADS", "3", 1);
  CHECK_THROWS_AS(parallel_for(64,
                               [&](std::size_t i) {
                                 if (i == 17) throw std::runtime_error("boom");
                               }),
                  std::runtime_error);
  unsetenv("FANSUB_THREADS");
}

TEST_CASE("solve_reduced reports a numeric error when no root is reachable") {
  // Equal densities and zero gap: the only reduced roots have rho1 below the
  // outer density, unreachable from a guess pinned to the other side.
  RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = d.rho_plus = 1.0;
  d.v_minus = {0.0, 0.5};
  d.v_plus = {1.0, 0.5};
  const Eos eos(d.gamma);
  try {
    solve_reduced(eos, d, 1e-3, 2.0, 0.5);
    FAIL("expected NumericError");
  } catch (const NumericError& e) {
    CHECK(e.residual > 0.0);
    CHECK(std::string(e.what()).find("solve_reduced") != std::string::npos);
  }
}
