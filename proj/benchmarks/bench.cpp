// bench.cpp — timing of the matrix exponential, a single propagation and the eta sweep

#include <benchmark/benchmark.h>

#include "esst/design.hpp"
#include "esst/metrics.hpp"
#include "esst/propagate.hpp"

namespace {

void BM_HermitianExpm(benchmark::State& state) {
    const esst::ComplexMatrix3 h = esst::build_hamiltonian({1.3, -0.7, 1.3}, esst::Chirality::Left);
    for (auto _ : state) benchmark::DoNotOptimize(esst::hermitian_expm(h, 0.01));
}
BENCHMARK(BM_HermitianExpm);

void BM_Propagate(benchmark::State& state) {
    const auto method = state.range(0) == 0 ? esst::Integrator::Midpoint : esst::Integrator::Magnus4;
    const esst::PulseSet f = esst::designed_pulses({0.5, 0.02, esst::kDefaultSteps + 1}, esst::Chirality::Left);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            esst::propagate_final(f, esst::Chirality::Left, esst::QuantumState::basis(0), esst::kDefaultSteps, method));
}
BENCHMARK(BM_Propagate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
    const auto etas = esst::log_spaced(0.005, 0.1, 20);
    for (auto _ : state) benchmark::DoNotOptimize(esst::sweep_eta(etas, 0.5, {esst::kDefaultSteps, 1}));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
