#include <benchmark/benchmark.h>

#include "asqg/norms.hpp"
#include "asqg/random_field.hpp"
#include "asqg/solver.hpp"

using namespace asqg;

namespace {

SpectralField test_field(int n) {
  return random_band_limited_field(Grid::make(n, n), 1, n / 3,
                                   SpectrumProfile::Decaying, 4.0);
}

void bm_transform_roundtrip(benchmark::State& state) {
  const int n = int(state.range(0));
  auto f = test_field(n);
  for (auto _ : state) {
    auto samples = from_spectral(f);
    benchmark::DoNotOptimize(to_spectral(f.grid, samples));
  }
}

void bm_nonlinear_term(benchmark::State& state) {
  const int n = int(state.range(0));
  auto f = test_field(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonlinear_term(f, VelocityLaw::Sqg));
  }
}

void bm_step(benchmark::State& state) {
  const int n = int(state.range(0));
  SimulationConfig c;
  c.n1 = c.n2 = n;
  c.dt = 1e-3;
  c.initial_condition.kind = InitialCondition::Kind::Random;
  c.initial_condition.random = {1, n / 3, 1.0};
  SolverState s = make_initial_state(c);
  for (auto _ : state) {
    s = step(s, 1e-3, c);
  }
}

void bm_grad_norms(benchmark::State& state) {
  const int n = int(state.range(0));
  auto f = test_field(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grad_norms(f, 0.5, 0.75));
  }
}

}  // namespace

BENCHMARK(bm_transform_roundtrip)->Arg(128)->Arg(256);
BENCHMARK(bm_nonlinear_term)->Arg(128)->Arg(256);
BENCHMARK(bm_step)->Arg(128)->Arg(256);
BENCHMARK(bm_grad_norms)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
