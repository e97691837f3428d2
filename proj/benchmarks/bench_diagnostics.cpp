#include <benchmark/benchmark.h>

#include "qdf/diagnostics.hpp"
#include "qdf/droplet.hpp"
#include "qdf/wigner.hpp"

namespace {

qdf::ComplexField droplet_field(std::size_t n) {
    const auto p = qdf::DropletParams::from_norm(1.0, 1.0, 0.9999);
    auto grid = std::make_shared<const qdf::SpatialGrid>(qdf::make_centered_grid(n, 0.0488));
    const auto st = qdf::DropletState::make(p, qdf::PotentialSpec::constant_linear(9.8));
    return qdf::full_wavefunction(st, grid, 1.0);
}

void Entropy(benchmark::State& state) {
    const auto psi = droplet_field(4096);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdf::shannon_entropy(psi));
    }
}
BENCHMARK(Entropy)->Unit(benchmark::kMicrosecond);

void Observables(benchmark::State& state) {
    const auto psi = droplet_field(4096);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qdf::norm(psi));
        benchmark::DoNotOptimize(qdf::center_of_mass(psi));
        benchmark::DoNotOptimize(qdf::peak_position(psi));
    }
}
BENCHMARK(Observables)->Unit(benchmark::kMicrosecond);

void WignerMap4096(benchmark::State& state) {
    const auto psi = droplet_field(4096);
    for (auto _ : state) {
        auto map = qdf::wigner(psi, 9.8 - 18.0, 9.8 + 18.0, 256);
        benchmark::DoNotOptimize(map.values.data());
    }
}
BENCHMARK(WignerMap4096)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
