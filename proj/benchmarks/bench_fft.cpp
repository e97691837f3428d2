#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "qdf/fft.hpp"

namespace {

std::vector<std::complex<double>> random_field(std::size_t n) {
    std::mt19937_64 rng(42);
    std::vector<std::complex<double>> v(n);
    for (auto& z : v) {
        z = {static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5,
             static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5};
    }
    return v;
}

void TransformRoundTrip(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qdf::Fft fft(n);
    auto v = random_field(n);
    for (auto _ : state) {
        fft.forward(v);
        fft.inverse(v);
        benchmark::DoNotOptimize(v.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * n);
}
BENCHMARK(TransformRoundTrip)->RangeMultiplier(4)->Range(1024, 16384);

void Upsample2x(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qdf::Fft fft(n);
    const auto v = random_field(n);
    for (auto _ : state) {
        auto fine = qdf::spectral_upsample2(fft, v);
        benchmark::DoNotOptimize(fine.data());
    }
}
BENCHMARK(Upsample2x)->Arg(4096);

}  // namespace
