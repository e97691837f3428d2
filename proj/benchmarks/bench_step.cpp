#include <benchmark/benchmark.h>

#include "qdf/droplet.hpp"
#include "qdf/propagator.hpp"

namespace {

void SplitStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto p = qdf::DropletParams::from_norm(1.0, 1.0, 0.9999);
    auto grid = std::make_shared<const qdf::SpatialGrid>(
        qdf::make_centered_grid(n, 400.0 / static_cast<double>(n)));
    const auto trap = qdf::PotentialSpec::modulated_linear(9.8, 0.3, 0.5);
    const auto st = qdf::DropletState::make(p, trap);
    qdf::ComplexField psi = qdf::full_wavefunction(st, grid, 0.0);

    qdf::EvolutionConfig cfg;
    cfg.dt = 1e-4;
    const auto g = qdf::egpe_couplings(p);
    cfg.g1 = g.g1;
    cfg.g2 = g.g2;

    double t = 0.0;
    for (auto _ : state) {
        psi = qdf::step(psi, trap, cfg, t);
        t += cfg.dt;
        benchmark::DoNotOptimize(psi.values().data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * n);
}
BENCHMARK(SplitStep)->RangeMultiplier(2)->Range(2048, 16384)->Unit(benchmark::kMicrosecond);

void Evolve1kSteps(benchmark::State& state) {
    const auto p = qdf::DropletParams::from_norm(1.0, 1.0, 0.9999);
    auto grid = std::make_shared<const qdf::SpatialGrid>(qdf::make_centered_grid(4096, 0.0488));
    const auto trap = qdf::PotentialSpec::constant_linear(9.8);
    const auto st = qdf::DropletState::make(p, trap);
    const qdf::ComplexField psi0 = qdf::full_wavefunction(st, grid, 0.0);

    qdf::EvolutionConfig cfg;
    cfg.dt = 1e-4;
    cfg.n_steps = 1000;
    cfg.record_every = 100;
    const auto g = qdf::egpe_couplings(p);
    cfg.g1 = g.g1;
    cfg.g2 = g.g2;

    for (auto _ : state) {
        auto rec = qdf::evolve(psi0, trap, cfg, {});
        benchmark::DoNotOptimize(rec.norms.data());
    }
}
BENCHMARK(Evolve1kSteps)->Unit(benchmark::kMillisecond);

}  // namespace
