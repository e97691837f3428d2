#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qdf/field.hpp"
#include "qdf/potentials.hpp"

namespace qdf {

/// Time-stepping parameters for the split-step spectral evolution of
///   i psi_t = -1/2 psi_xx + g2 |psi|^2 psi - g1 |psi| psi + a(t) x psi.
struct EvolutionConfig {
    double dt = 1e-4;
    std::size_t n_steps = 10000;
    std::size_t record_every = 100;
    double g1 = 1.0;  ///< quadratic (BMF) strength, >= 0
    double g2 = 1.0;  ///< cubic (EMF) strength, >= 0

    void validate() const;

    /// True when the kinetic phase per step stays below pi at k_max
    /// (anti-aliasing sanity; callers may warn, evolution still proceeds).
    bool kinetic_phase_ok(const SpatialGrid& grid) const;
};

/// Observer samples taken every record_every steps (plus the initial and
/// final states). All sequences share the same length.
struct EvolutionRecord {
    std::vector<double> times;
    std::vector<double> norms;
    std::vector<double> centers_of_mass;
    std::vector<double> peak_positions;
    std::vector<ComplexField> snapshots;  ///< empty unless requested
};

struct EvolveOptions {
    bool store_snapshots = false;
    /// Called at every observation with (t, psi); runs on the evolution
    /// thread in time order.
    std::function<void(double, const ComplexField&)> on_record;
};

/// Potential coefficient sampled at the sub-interval midpoint, which keeps
/// the splitting second-order for time-dependent traps.
double time_ordered_potential_midpoint(const PotentialSpec& spec, double t, double dt);

/// One Strang step (half kinetic, full nonlinear+potential at the midpoint,
/// half kinetic) starting from time t. Throws blowup_error on NaN/Inf.
ComplexField step(const ComplexField& psi, const PotentialSpec& spec, const EvolutionConfig& cfg,
                  double t);

/// Repeated stepping with observer sampling. Throws blowup_error if the
/// field blows up and domain_exit_error when the density peak enters the
/// 10 dx guard band at the periodic boundary.
EvolutionRecord evolve(const ComplexField& psi0, const PotentialSpec& spec,
                       const EvolutionConfig& cfg, const EvolveOptions& options = {});

}  // namespace qdf
