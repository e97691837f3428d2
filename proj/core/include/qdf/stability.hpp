#pragma once

#include <cstdint>
#include <vector>

#include "qdf/droplet.hpp"
#include "qdf/field.hpp"
#include "qdf/propagator.hpp"

namespace qdf {

enum class NoiseScale {
    Amplitude,  ///< noise amplitude = fraction * max |psi|  (default)
    Density,    ///< noise amplitude = sqrt(fraction * max |psi|^2)
};

enum class NoiseDistribution {
    UniformReal,      ///< real white noise, uniform in [-A, A] (default)
    GaussianComplex,  ///< complex, independent N(0, A^2/2) per quadrature
};

struct NoiseSpec {
    double fraction = 0.01;  ///< in [0, 1)
    std::uint64_t seed = 0;
    std::size_t n_realizations = 8;
    NoiseScale scale = NoiseScale::Amplitude;
    NoiseDistribution distribution = NoiseDistribution::UniformReal;

    void validate() const;
};

struct StabilityReport {
    std::vector<double> per_x_sd;        ///< std-dev of final density across realizations
    double max_relative_deviation = 0.0; ///< max_x (|mean - clean| + sd) / max clean density
    double pass_threshold = 0.0;
    bool passed = false;
    std::vector<double> clean_final_density;
    std::vector<double> mean_noisy_final_density;
};

/// Adds white noise to every grid point; deterministic for a given
/// (seed, realization_index). fraction = 0 returns the input unchanged.
ComplexField add_noise(const ComplexField& psi, const NoiseSpec& spec,
                       std::size_t realization_index);

/// Section-V robustness protocol: co-evolve the clean analytic state and
/// n noisy realizations with identical settings, then reduce the final
/// densities. Realizations run in parallel; the reduction is performed in
/// fixed index order so reports are bit-reproducible.
StabilityReport stability_run(const DropletState& state, const PotentialSpec& spec,
                              const EvolutionConfig& cfg, const NoiseSpec& noise,
                              std::shared_ptr<const SpatialGrid> grid,
                              double pass_threshold = 0.10);

}  // namespace qdf
