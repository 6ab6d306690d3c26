#include <benchmark/benchmark.h>

#include "fansub/search.hpp"
#include "fansub/thresholds.hpp"

namespace {

fansub::RiemannData two_shock_data() {
  fansub::RiemannData d;
  d.gamma = 2.0;
  d.rho_minus = 1.0;
  d.rho_plus = 4.0;
  d.v_minus = {0.0, 4.0};
  d.v_plus = {1.0, 0.0};
  return d;
}

void BM_SolveRiemann(benchmark::State& state) {
  const auto d = two_shock_data();
  for (auto _ : state) {
    auto fan = fansub::solve_riemann(d);
    benchmark::DoNotOptimize(fan);
  }
}
BENCHMARK(BM_SolveRiemann);

void BM_SolveReduced(benchmark::State& state) {
  const auto d = two_shock_data();
  const fansub::Eos eos(d.gamma);
  const auto fan = fansub::solve_riemann(d);
  for (auto _ : state) {
    auto root = fansub::solve_reduced(eos, d, 1e-3, *fan.middle_density,
                                      *fan.middle_normal_velocity);
    benchmark::DoNotOptimize(root);
  }
}
BENCHMARK(BM_SolveReduced);

void BM_Search(benchmark::State& state) {
  const auto d = two_shock_data();
  const fansub::Eos eos(d.gamma);
  const auto grid = fansub::default_eps1_grid();
  for (auto _ : state) {
    auto result = fansub::search(eos, d, grid);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_Search);

void BM_Certify(benchmark::State& state) {
  const auto d = two_shock_data();
  const fansub::Eos eos(d.gamma);
  const auto result = fansub::search(eos, d, fansub::default_eps1_grid());
  const auto& hit = result.hits.front();
  for (auto _ : state) {
    auto cert = fansub::certify(eos, hit.subsolution, d);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_Certify);

void BM_WeakForm(benchmark::State& state) {
  const auto d = two_shock_data();
  const fansub::Eos eos(d.gamma);
  const auto result = fansub::search(eos, d, fansub::default_eps1_grid());
  const auto& hit = result.hits.front();
  const int quad_res = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto report = fansub::weak_form_residual(eos, hit.subsolution, d, 4, quad_res, 7);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_WeakForm)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
