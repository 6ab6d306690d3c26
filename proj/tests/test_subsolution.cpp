#include <doctest.h>

#include <cmath>

#include "fansub/search.hpp"
#include "support/oracles.hpp"

using namespace fansub;

namespace {

RiemannData symmetric_data() {
  RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = d.rho_plus = 1.0;
  d.v_minus = {0.0, 1.0};
  d.v_plus = {0.0, -1.0};
  return d;
}

RiemannData two_shock_contact_data() {
  RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = 1.0;
  d.rho_plus = 4.0;
  d.v_minus = {0.0, 4.0};
  d.v_plus = {1.0, 0.0};
  return d;
}

}  // namespace

TEST_CASE("reduced residual vanishes at the classical two-shock state for eps1 = 0") {
  const auto d = symmetric_data();
  const Eos eos(d.gamma);
  const double rho_m = oracles::symmetric_cubic_root();
  const auto r = reduced_residual(eos, d, rho_m, 0.0, 0.0);
  CHECK(std::abs(r.left) <= 1e-9);
  CHECK(std::abs(r.right) <= 1e-9);

  // At the 6-digit rounding of the root the residual is bounded by the
  // wave-curve slope (~5.2) times the rounding error (~2.3e-6).
  const auto r6 = reduced_residual(eos, d, 1.80194, 0.0, 0.0);
  CHECK(std::abs(r6.left) < 2e-5);
  CHECK(std::abs(r6.right) < 2e-5);
}

TEST_CASE("reduced residual rejects rho1 at an outer density") {
  const auto d = two_shock_contact_data();
  const Eos eos(d.gamma);
  CHECK_THROWS_AS(reduced_residual(eos, d, d.rho_minus, 0.5, 0.01),
                  SingularEliminationError);
  CHECK_THROWS_AS(reduced_residual(eos, d, d.rho_plus * (1.0 + 1e-15), 0.5, 0.01),
                  SingularEliminationError);
}

TEST_CASE("solve_reduced keeps beta = 0 on symmetric data") {
  const auto d = symmetric_data();
  const Eos eos(d.gamma);
  double rho1 = oracles::symmetric_cubic_root(), beta = 0.0;
  for (double eps1 : {1e-6, 1e-4, 1e-3, 1e-2, 5e-2}) {
    const auto root = solve_reduced(eos, d, eps1, rho1, beta);
    CHECK(std::abs(root.beta) <= 1e-12);
    CHECK(root.nu_minus < root.beta);
    CHECK(root.beta < root.nu_plus);
    const auto r = reduced_residual(eos, d, root.rho1, root.beta, eps1);
    CHECK(std::abs(r.left) <= 1e-11);
    CHECK(std::abs(r.right) <= 1e-11);
    rho1 = root.rho1;
    beta = root.beta;
  }
}

TEST_CASE("solve_reduced converges to the classical root as eps1 drops") {
  const auto d = symmetric_data();
  const Eos eos(d.gamma);
  const WaveFan fan = solve_riemann(d);
  double rho1 = *fan.middle_density, beta = *fan.middle_normal_velocity;
  double prev = 1e300;
  for (double eps1 = 1e-2; eps1 >= 1e-8 / 2; eps1 /= 10.0) {
    const auto root = solve_reduced(eos, d, eps1, rho1, beta);
    const double dist = std::hypot(root.rho1 - *fan.middle_density,
                                   root.beta - *fan.middle_normal_velocity);
    CHECK(dist < prev);
    prev = dist;
    rho1 = root.rho1;
    beta = root.beta;
  }
  CHECK(prev <= 1e-6);
}

TEST_CASE("solve_reduced continues past the classical root in the SS regime") {
  const auto d = two_shock_contact_data();
  const Eos eos(d.gamma);
  const WaveFan fan = solve_riemann(d);
  const auto root = solve_reduced(eos, d, 0.01, *fan.middle_density,
                                  *fan.middle_normal_velocity);
  CHECK(root.rho1 > 4.0);
  CHECK(std::abs(root.rho1 - *fan.middle_density) < 0.1);
}

TEST_CASE("eps2 interval is non-empty in the two-shock regime at small eps1") {
  const auto d = two_shock_contact_data();
  const Eos eos(d.gamma);
  const WaveFan fan = solve_riemann(d);
  const auto root = solve_reduced(eos, d, 1e-4, *fan.middle_density,
                                  *fan.middle_normal_velocity);
  const auto iv = eps2_interval(eos, d, root.rho1, root.beta, 1e-4);
  CHECK_FALSE(iv.empty());
  CHECK(iv.lo == 0.0);
  CHECK(iv.hi > 0.0);
}

TEST_CASE("symmetric data: both interfaces impose the same eps2 constraint") {
  const auto d = symmetric_data();
  const Eos eos(d.gamma);
  const WaveFan fan = solve_riemann(d);
  double rho1 = *fan.middle_density, beta = 0.0;
  for (double eps1 : {1e-6, 1e-3, 1e-2}) {
    const auto root = solve_reduced(eos, d, eps1, rho1, beta);
    const auto iv = eps2_interval(eos, d, root.rho1, root.beta, eps1);
    CHECK(iv.left.coeff == doctest::Approx(iv.right.coeff).epsilon(1e-12));
    CHECK(iv.left.bound == doctest::Approx(iv.right.bound).epsilon(1e-12));
    // Closed-form upper bound for this family (gamma = 2, unit densities):
    // eps2 <= eps1 (rho1 - 2) + (rho1 - 1)^3 / rho1.
    const double predicted =
        eps1 * (root.rho1 - 2.0) + std::pow(root.rho1 - 1.0, 3) / root.rho1;
    CHECK(iv.hi == doctest::Approx(predicted).epsilon(1e-12));
    rho1 = root.rho1;
  }
}

TEST_CASE("reversed gap with rho1 between the densities has an empty interval") {
  RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = 1.0;
  d.rho_plus = 4.0;
  d.v_minus = {0.0, 0.0};
  d.v_plus = {0.0, 1.0};
  const Eos eos(d.gamma);
  const double rho1 = 2.0, beta = 0.5, eps1 = 0.01;
  const auto iv = eps2_interval(eos, d, rho1, beta, eps1);
  CHECK(iv.empty());

  // Independent arithmetic: evaluate both interface inequalities at sampled
  // eps2 and confirm they never hold simultaneously.
  const auto eps_of = [&](double rho) { return internal_energy(eos, rho); };
  const auto g = [&](double a, double b) {
    return pressure(eos, a) + pressure(eos, b) -
           2.0 * a * b * (eps_of(a) - eps_of(b)) / (a - b);
  };
  for (double eps2 = 1e-8; eps2 <= 10.0; eps2 *= 3.3) {
    const double lhs_l = (beta - d.v_minus[1]) * g(d.rho_minus, rho1);
    const double rhs_l = eps1 * rho1 * (d.v_minus[1] + beta) -
                         (eps1 + eps2) * d.rho_minus * rho1 *
                             (beta - d.v_minus[1]) / (d.rho_minus - rho1);
    const double lhs_r = (d.v_plus[1] - beta) * g(rho1, d.rho_plus);
    const double rhs_r = -eps1 * rho1 * (d.v_plus[1] + beta) +
                         (eps1 + eps2) * rho1 * d.rho_plus *
                             (d.v_plus[1] - beta) / (rho1 - d.rho_plus);
    const bool both_hold = (lhs_l <= rhs_l) && (lhs_r <= rhs_r);
    CHECK_FALSE(both_hold);
  }
}

TEST_CASE("pick_eps2 policy") {
  Eps2Interval iv;
  iv.lo = 0.2;
  iv.hi = 0.4;
  CHECK(pick_eps2(iv) == doctest::Approx(0.3));
  iv.hi = std::numeric_limits<double>::infinity();
  CHECK(pick_eps2(iv) == doctest::Approx(1.2));
  iv.hi = 0.1;
  CHECK_THROWS_AS(pick_eps2(iv), DomainError);
}

TEST_CASE("assemble builds the ansatz states") {
  const auto d = two_shock_contact_data();
  const Eos eos(d.gamma);
  AnsatzPoint p;
  p.rho1 = 4.3;
  p.beta = 0.25;
  p.nu_minus = -0.8;
  p.nu_plus = 3.0;
  p.eps1 = 1e-3;
  p.eps2 = 1e-2;
  const FanSubsolution sub = assemble(eos, d, p);

  CHECK(sub.region1.v[0] == d.v_minus[0]);
  CHECK(sub.region2.v[0] == d.v_plus[0]);
  CHECK(sub.region1.v[1] == p.beta);
  CHECK(sub.region2.v[1] == p.beta);
  CHECK(sub.region1.rho == sub.region2.rho);
  CHECK(sub.partition.nu_1 == p.beta);
  CHECK(sub.region1.C ==
        doctest::Approx(d.v_minus[0] * d.v_minus[0] + p.beta * p.beta + p.eps1 + p.eps2));
  CHECK(sub.region1.u.d == doctest::Approx(d.v_minus[0] * p.beta));
  CHECK(sub.region2.u.d == doctest::Approx(d.v_plus[0] * p.beta));
  // gamma_i - C_i/2 agree by construction.
  CHECK(sub.region1.u.g - 0.5 * sub.region1.C ==
        doctest::Approx(sub.region2.u.g - 0.5 * sub.region2.C).epsilon(1e-14));
}

TEST_CASE("assemble on symmetric data zeroes the off-diagonal entries") {
  const auto d = symmetric_data();
  const Eos eos(d.gamma);
  AnsatzPoint p;
  p.rho1 = 1.8;
  p.beta = 0.0;
  p.nu_minus = -1.2;
  p.nu_plus = 1.2;
  p.eps1 = 1e-3;
  p.eps2 = 1e-2;
  const FanSubsolution sub = assemble(eos, d, p);
  CHECK(sub.region1.u.d == 0.0);
  CHECK(sub.region2.u.d == 0.0);
  CHECK(sub.partition.nu_1 == 0.0);
}

TEST_CASE("equal tangential velocities collapse the two middle regions") {
  auto d = two_shock_contact_data();
  d.v_minus[0] = d.v_plus[0] = 0.7;
  const Eos eos(d.gamma);
  AnsatzPoint p;
  p.rho1 = 4.3;
  p.beta = 0.25;
  p.nu_minus = -0.8;
  p.nu_plus = 3.0;
  p.eps1 = 1e-3;
  p.eps2 = 1e-2;
  const FanSubsolution sub = assemble(eos, d, p);
  CHECK(sub.region1.C == sub.region2.C);
  CHECK(sub.region1.u.g == sub.region2.u.g);
  CHECK(sub.region1.u.d == sub.region2.u.d);
}

TEST_CASE("assemble rejects bad points") {
  const auto d = two_shock_contact_data();
  const Eos eos(d.gamma);
  AnsatzPoint p;
  p.rho1 = 4.3;
  p.beta = 0.25;
  p.nu_minus = 0.5;  // above beta
  p.nu_plus = 3.0;
  p.eps1 = 1e-3;
  p.eps2 = 1e-2;
  CHECK_THROWS_AS(assemble(eos, d, p), OrderingError);
  p.nu_minus = -0.8;
  p.eps1 = 0.0;
  CHECK_THROWS_AS(assemble(eos, d, p), DomainError);
}

TEST_CASE("search certifies subsolutions in the two-shock regime") {
  const auto d = two_shock_contact_data();
  const Eos eos(d.gamma);
  const SearchResult result = search(eos, d, default_eps1_grid());
  REQUIRE(result.found());

  for (const SearchHit& hit : result.hits) {
    CHECK(hit.certificate.pass);
    const auto& p = hit.point;
    // Jump factorization identities.
    const double lhs_l = p.beta - p.nu_minus;
    const double rhs_l = d.rho_minus / p.rho1 * (d.v_minus[1] - p.nu_minus);
    CHECK(std::abs(lhs_l - rhs_l) <= 1e-10 * std::max(1.0, std::abs(lhs_l)));
    const double lhs_r = p.nu_plus - p.beta;
    const double rhs_r = d.rho_plus / p.rho1 * (p.nu_plus - d.v_plus[1]);
    CHECK(std::abs(lhs_r - rhs_r) <= 1e-10 * std::max(1.0, std::abs(lhs_r)));
    // Middle-interface admissibility holds with equality.
    const auto adm = check_admissibility(eos, hit.subsolution, d);
    CHECK(std::abs(adm[1]) <= 1e-10);
  }
}

TEST_CASE("search returns nothing for two-rarefaction data") {
  RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = d.rho_plus = 1.0;
  d.v_minus = {0.0, -1.0};
  d.v_plus = {1.0, 1.0};
  CHECK(classify(d).left == WaveKind::Rarefaction);
  CHECK(classify(d).right == WaveKind::Rarefaction);
  const SearchResult result = search(Eos(d.gamma), d, default_eps1_grid());
  CHECK_FALSE(result.found());
  CHECK_FALSE(result.diagnostics.empty());
}

TEST_CASE("search returns nothing for a stationary contact") {
  RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = d.rho_plus = 1.0;
  d.v_minus = {0.0, 0.0};
  d.v_plus = {1.0, 0.0};
  const Eos eos(d.gamma);
  const SearchResult result = search(eos, d, default_eps1_grid());
  CHECK_FALSE(result.found());

  // Brute force over the ansatz degrees of freedom: no certified point.
  for (double rho1 : {0.3, 0.7, 1.5, 2.5}) {
    for (double beta : {-0.8, -0.2, 0.0, 0.3, 0.9}) {
      for (double eps1 : {1e-6, 1e-3, 1e-1}) {
        for (double eps2 : {1e-6, 1e-3, 1e-1, 1.0}) {
          AnsatzPoint p;
          p.rho1 = rho1;
          p.beta = beta;
          p.nu_minus = (d.rho_minus * d.v_minus[1] - rho1 * beta) /
                       (d.rho_minus - rho1);
          p.nu_plus = (rho1 * beta - d.rho_plus * d.v_plus[1]) /
                      (rho1 - d.rho_plus);
          p.eps1 = eps1;
          p.eps2 = eps2;
          try {
            const FanSubsolution sub = assemble(eos, d, p);
            CHECK_FALSE(certify(eos, sub, d).pass);
          } catch (const OrderingError&) {
          } catch (const DomainError&) {
          }
        }
      }
    }
  }
}

TEST_CASE("search and interval are invariant under tangential Galilean shifts") {
  const auto d = two_shock_contact_data();
  auto shifted = d;
  const double c = 3.7;
  shifted.v_minus[0] += c;
  shifted.v_plus[0] += c;
  const Eos eos(d.gamma);

  const WaveFan fan = solve_riemann(d);
  const auto root = solve_reduced(eos, d, 1e-3, *fan.middle_density,
                                  *fan.middle_normal_velocity);
  const auto root_shifted = solve_reduced(eos, shifted, 1e-3, *fan.middle_density,
                                          *fan.middle_normal_velocity);
  CHECK(root.rho1 == root_shifted.rho1);
  CHECK(root.beta == root_shifted.beta);
  CHECK(root.nu_minus == root_shifted.nu_minus);
  CHECK(root.nu_plus == root_shifted.nu_plus);

  const auto iv = eps2_interval(eos, d, root.rho1, root.beta, 1e-3);
  const auto iv_shifted = eps2_interval(eos, shifted, root.rho1, root.beta, 1e-3);
  CHECK(iv.lo == iv_shifted.lo);
  CHECK(iv.hi == iv_shifted.hi);

  const auto hits = search(eos, d, default_eps1_grid()).hits;
  const auto hits_shifted = search(eos, shifted, default_eps1_grid()).hits;
  REQUIRE(hits.size() == hits_shifted.size());
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto& a = hits[i];
    const auto& b = hits_shifted[i];
    CHECK(a.point.rho1 == b.point.rho1);
    CHECK(a.point.beta == b.point.beta);
    CHECK(a.point.eps2 == b.point.eps2);
    // alpha shifts by c, delta by c beta, C by 2 c v1 + c^2.
    CHECK(b.subsolution.region1.v[0] == doctest::Approx(a.subsolution.region1.v[0] + c));
    CHECK(b.subsolution.region1.u.d ==
          doctest::Approx(a.subsolution.region1.u.d + c * a.point.beta).epsilon(1e-12));
    CHECK(b.subsolution.region1.C ==
          doctest::Approx(a.subsolution.region1.C + 2 * c * d.v_minus[0] + c * c)
              .epsilon(1e-12));
  }
}

TEST_CASE("geometric grid endpoints and shape") {
  const auto g = geometric_grid(1e-8, 1e-1, 16);
  CHECK(g.size() == 16);
  CHECK(g.front() == doctest::Approx(1e-8));
  CHECK(g.back() == doctest::Approx(1e-1));
  for (std::size_t i = 1; i < g.size(); ++i)
    CHECK(g[i] / g[i - 1] == doctest::Approx(g[1] / g[0]).epsilon(1e-9));
  CHECK_THROWS_AS(geometric_grid(0.0, 1.0, 4), DomainError);
}
