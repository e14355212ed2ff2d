#include <benchmark/benchmark.h>

#include "clonebelt/oracle.hpp"

namespace {

using namespace clonebelt;

void BM_SolveOptimal(benchmark::State& state) {
  const Belt belt = Belt::make(0.3, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(solve_optimal(belt));
}
BENCHMARK(BM_SolveOptimal);

void BM_FidelitySurface(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_fidelity_surface(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_FidelitySurface)->Arg(50)->Arg(100)->Arg(200);

void BM_SimulatedFidelity(benchmark::State& state) {
  const CloneAngles angles{0.6, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(simulated_fidelity(angles, 1.1, 0.7));
}
BENCHMARK(BM_SimulatedFidelity);

void BM_QuadMeanFidelity(benchmark::State& state) {
  const Belt belt = Belt::make(0.3, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(quad_mean_fidelity(belt, {0.6, 0.4}));
}
BENCHMARK(BM_QuadMeanFidelity);

void BM_MachineBeltFidelity(benchmark::State& state) {
  Rng rng(1);
  const auto machine = GeneralMachine::random(rng);
  const BeltCubature cubature(Belt::make(0.3, 2.0), 6, 8);
  for (auto _ : state) benchmark::DoNotOptimize(machine_belt_fidelity(machine, cubature, MachineObjective::mean_of_min));
}
BENCHMARK(BM_MachineBeltFidelity);

void BM_OptimizeAnglesNumeric(benchmark::State& state) {
  const Belt belt = Belt::make(0.3, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(optimize_angles_numeric(belt, 64, 2000));
}
BENCHMARK(BM_OptimizeAnglesNumeric)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
