#include "qdf/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdf/diagnostics.hpp"
#include "qdf/errors.hpp"
#include "qdf/fft.hpp"

namespace qdf {

void EvolutionConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw config_error("evolution: dt must be positive");
    if (record_every == 0) throw config_error("evolution: record_every must be >= 1");
    if (g1 < 0.0 || g2 < 0.0) throw config_error("evolution: couplings must be >= 0");
}

bool EvolutionConfig::kinetic_phase_ok(const SpatialGrid& grid) const {
    const double kmax = grid.k_max();
    return dt * kmax * kmax / 2.0 < std::numbers::pi;
}

double time_ordered_potential_midpoint(const PotentialSpec& spec, double t, double dt) {
    if (!(dt > 0.0)) throw config_error("midpoint: dt must be positive");
    return gamma_ddot(spec, t + 0.5 * dt);
}

namespace {

/// Workspace for repeated Strang steps: FFT plan, kinetic phase tables and
/// position table are fixed over an evolution.
class Stepper {
public:
    using PeakCallback = std::function<void(std::size_t peak, double t)>;

    Stepper(const SpatialGrid& grid, const EvolutionConfig& cfg)
        : grid_(grid),
          cfg_(cfg),
          fft_(grid.size()),
          kinetic_half_(grid.size()),
          kinetic_full_(grid.size()),
          x_(grid.size()) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            const double k = grid.k(j);
            kinetic_half_[j] = std::polar(1.0, -k * k * cfg.dt / 4.0);
            kinetic_full_[j] = std::polar(1.0, -k * k * cfg.dt / 2.0);
            x_[j] = grid.x(j);
        }
    }

    /// Advances values by n_steps starting at time t0, fusing the trailing
    /// and leading half-kinetic factors of adjacent steps (the fused
    /// composition is identical to stepping one at a time). The callback
    /// sees the density peak index once per step for the boundary guard.
    void apply_block(std::vector<complex>& v, const PotentialSpec& spec, double t0,
                     std::size_t n_steps, const PeakCallback& on_peak = {}) {
        if (n_steps == 0) return;
        kinetic(v, kinetic_half_);
        for (std::size_t s = 0; s < n_steps; ++s) {
            const double t = t0 + static_cast<double>(s) * cfg_.dt;
            nonlinear_potential(v, spec, t, on_peak);
            kinetic(v, s + 1 < n_steps ? kinetic_full_ : kinetic_half_);
        }
    }

private:
    void kinetic(std::vector<complex>& v, const std::vector<complex>& table) {
        fft_.forward(v);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] *= table[j];
        fft_.inverse(v);
    }

    void nonlinear_potential(std::vector<complex>& v, const PotentialSpec& spec, double t,
                             const PeakCallback& on_peak) {
        const double a_mid = time_ordered_potential_midpoint(spec, t, cfg_.dt);
        double rho_max = 0.0, rho_sum = 0.0;
        std::size_t peak = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            const double rho = std::norm(v[j]);
            rho_sum += rho;
            if (rho > rho_max) {
                rho_max = rho;
                peak = j;
            }
            const double amp = std::sqrt(rho + 1e-300);
            const double phase = -(cfg_.g2 * rho - cfg_.g1 * amp + a_mid * x_[j]) * cfg_.dt;
            v[j] *= std::polar(1.0, phase);
        }
        if (!std::isfinite(rho_sum)) {
            throw blowup_error("evolution: NaN/Inf detected at t=" + std::to_string(t + cfg_.dt),
                               t + cfg_.dt);
        }
        if (on_peak) on_peak(peak, t + cfg_.dt);
    }

    const SpatialGrid& grid_;
    const EvolutionConfig& cfg_;
    Fft fft_;
    std::vector<complex> kinetic_half_;
    std::vector<complex> kinetic_full_;
    std::vector<double> x_;
};

void check_guard(const SpatialGrid& grid, std::size_t peak, double t) {
    const std::size_t guard = 10;
    if (peak < guard || peak + guard >= grid.size()) {
        throw domain_exit_error(
            "evolution: density peak entered the boundary guard band at t=" + std::to_string(t), t);
    }
}

void observe(EvolutionRecord& rec, const ComplexField& psi, double t, bool store,
             const std::function<void(double, const ComplexField&)>& on_record) {
    rec.times.push_back(t);
    rec.norms.push_back(norm(psi));
    rec.centers_of_mass.push_back(center_of_mass(psi));
    rec.peak_positions.push_back(peak_position(psi));
    if (store) rec.snapshots.push_back(psi);
    if (on_record) on_record(t, psi);
}

}  // namespace

ComplexField step(const ComplexField& psi, const PotentialSpec& spec, const EvolutionConfig& cfg,
                  double t) {
    cfg.validate();
    spec.validate();
    ComplexField out = psi;
    Stepper stepper(psi.grid(), cfg);
    stepper.apply_block(out.values(), spec, t, 1);
    if (!out.finite()) throw blowup_error("step: NaN/Inf in output", t + cfg.dt);
    return out;
}

EvolutionRecord evolve(const ComplexField& psi0, const PotentialSpec& spec,
                       const EvolutionConfig& cfg, const EvolveOptions& options) {
    cfg.validate();
    spec.validate();
    if (!psi0.finite()) throw blowup_error("evolve: initial state not finite", 0.0);

    EvolutionRecord rec;
    ComplexField psi = psi0;
    Stepper stepper(psi.grid(), cfg);

    observe(rec, psi, 0.0, options.store_snapshots, options.on_record);

    const auto guard = [&](std::size_t peak, double t) { check_guard(psi.grid(), peak, t); };
    std::size_t i = 0;
    while (i < cfg.n_steps) {
        const std::size_t next_record =
            std::min(cfg.n_steps, (i / cfg.record_every + 1) * cfg.record_every);
        stepper.apply_block(psi.values(), spec, static_cast<double>(i) * cfg.dt, next_record - i,
                            guard);
        i = next_record;
        observe(rec, psi, static_cast<double>(i) * cfg.dt, options.store_snapshots,
                options.on_record);
    }
    return rec;
}

}  // namespace qdf
