#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdf/droplet.hpp"
#include "qdf/grid.hpp"
#include "qdf/potentials.hpp"
#include "qdf/propagator.hpp"
#include "qdf/stability.hpp"

namespace qdf {

/// Fully-resolved run configuration. Parsed from a single JSON document;
/// unknown keys are rejected with their key path, and exactly one of
/// droplet.N / droplet.mu_ratio may be given.
struct RunConfig {
    // grid
    std::size_t grid_n = 4096;
    double grid_dx = 0.0488;
    std::optional<double> grid_x_min;  ///< absent = centred on x = 0

    // droplet (figure-style signs accepted; resolved via |G1|, |G2|)
    std::optional<double> droplet_norm{1.0};  ///< atom number N (default droplet)
    std::optional<double> droplet_mu_ratio;   ///< mu / mu0
    double G1 = -1.0;
    double G2 = 0.9999;
    KineticConvention convention = KineticConvention::HalfLaplacian;

    PotentialSpec potential;  ///< defaults to free space

    // evolution
    double dt = 1e-4;
    std::size_t n_steps = 10000;
    std::size_t record_every = 100;
    bool store_snapshots = false;

    // diagnostics
    double wigner_time = 1.0;
    std::optional<double> wigner_p_min;  ///< absent = -k_max/2
    std::optional<double> wigner_p_max;  ///< absent = +k_max/2
    std::size_t wigner_n_p = 256;
    bool entropy_normalized = true;
    std::optional<double> entropy_window_lo;
    std::optional<double> entropy_window_hi;
    std::vector<double> probes{20.0};

    // noise (stability subcommand)
    double noise_fraction = 0.01;
    std::size_t noise_realizations = 8;
    NoiseScale noise_scale = NoiseScale::Amplitude;
    NoiseDistribution noise_distribution = NoiseDistribution::UniformReal;

    std::string output_dir = "out";
    std::uint64_t seed = 1;

    // --- resolution helpers ---
    std::shared_ptr<const SpatialGrid> make_spatial_grid() const;
    DropletParams resolve_droplet() const;
    DropletState resolve_state() const;
    EvolutionConfig evolution_config() const;
    NoiseSpec noise_spec() const;

    nlohmann::json to_json() const;  ///< resolved document; reparses to an identical config
};

/// Parses a JSON document (empty text = all defaults). Throws config_error
/// for malformed documents, unknown keys and invariant violations.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_json(const nlohmann::json& doc);

/// Applies a dotted-key command-line override (`potential.a=9.8`) onto a
/// raw JSON document. Values parse as JSON scalars, falling back to string.
void apply_override(nlohmann::json& doc, const std::string& dotted_key, const std::string& value);

}  // namespace qdf
