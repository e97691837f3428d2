#include "qdf/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdf/errors.hpp"
#include "qdf/parallel.hpp"
#include "qdf/random.hpp"

namespace qdf {

void NoiseSpec::validate() const {
    if (!(fraction >= 0.0) || fraction >= 1.0) {
        throw config_error("noise: fraction must lie in [0, 1)");
    }
    if (n_realizations == 0) throw config_error("noise: need at least one realization");
}

ComplexField add_noise(const ComplexField& psi, const NoiseSpec& spec,
                       std::size_t realization_index) {
    spec.validate();
    if (spec.fraction == 0.0) return psi;

    double peak_amp = 0.0;
    for (const auto& z : psi.values()) peak_amp = std::max(peak_amp, std::abs(z));

    double amplitude = 0.0;
    if (spec.scale == NoiseScale::Amplitude) {
        amplitude = spec.fraction * peak_amp;
    } else {
        amplitude = std::sqrt(spec.fraction * peak_amp * peak_amp);
    }

    auto rng = make_stream(spec.seed, realization_index);
    ComplexField out = psi;
    for (auto& z : out.values()) {
        if (spec.distribution == NoiseDistribution::UniformReal) {
            z += amplitude * uniform_pm1(rng);
        } else {
            const double re = gaussian01(rng);
            const double im = gaussian01(rng);
            z += amplitude * std::sqrt(0.5) * complex(re, im);
        }
    }
    return out;
}

StabilityReport stability_run(const DropletState& state, const PotentialSpec& spec,
                              const EvolutionConfig& cfg, const NoiseSpec& noise,
                              std::shared_ptr<const SpatialGrid> grid,
                              double pass_threshold) {
    noise.validate();
    cfg.validate();
    if (noise.n_realizations < 2) {
        throw config_error("stability: need at least 2 realizations for a standard deviation");
    }

    const ComplexField psi0 = full_wavefunction(state, grid, 0.0);
    const std::size_t n = psi0.size();
    const std::size_t runs = noise.n_realizations + 1;  // slot 0 = clean

    struct Failure {
        bool hit = false;
        double time = 0.0;
        std::string what;
    };
    std::vector<std::vector<double>> final_density(runs);
    std::vector<Failure> failures(runs);

    parallel_for(runs, [&](std::size_t r) {
        const ComplexField start = r == 0 ? psi0 : add_noise(psi0, noise, r - 1);
        EvolutionConfig run_cfg = cfg;
        run_cfg.record_every = std::max<std::size_t>(cfg.n_steps, 1);  // endpoints only
        EvolveOptions opts;
        opts.store_snapshots = true;
        try {
            const EvolutionRecord rec = evolve(start, spec, run_cfg, opts);
            final_density[r] = rec.snapshots.back().density();
        } catch (const blowup_error& e) {
            failures[r] = Failure{true, e.time, e.what()};
        }
    });

    for (std::size_t r = 0; r < runs; ++r) {
        if (failures[r].hit) {
            const std::string label = r == 0 ? "clean run" : "realization " + std::to_string(r - 1);
            throw blowup_error("stability: " + label + " blew up: " + failures[r].what,
                               failures[r].time);
        }
    }

    // fixed index-order reduction keeps reports bit-identical regardless of
    // how realizations were scheduled
    const std::vector<double>& clean = final_density[0];
    const double n_real = static_cast<double>(noise.n_realizations);

    std::vector<double> mean(n, 0.0);
    for (std::size_t r = 1; r < runs; ++r) {
        for (std::size_t j = 0; j < n; ++j) mean[j] += final_density[r][j];
    }
    for (std::size_t j = 0; j < n; ++j) mean[j] /= n_real;

    std::vector<double> sd(n, 0.0);
    for (std::size_t r = 1; r < runs; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = final_density[r][j] - mean[j];
            sd[j] += d * d;
        }
    }
    for (std::size_t j = 0; j < n; ++j) sd[j] = std::sqrt(sd[j] / (n_real - 1.0));

    const double clean_peak = *std::max_element(clean.begin(), clean.end());
    double dev = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        dev = std::max(dev, (std::abs(mean[j] - clean[j]) + sd[j]) / clean_peak);
    }

    StabilityReport report;
    report.per_x_sd = std::move(sd);
    report.max_relative_deviation = dev;
    report.pass_threshold = pass_threshold;
    report.passed = dev < pass_threshold;
    report.clean_final_density = clean;
    report.mean_noisy_final_density = std::move(mean);
    return report;
}

}  // namespace qdf
