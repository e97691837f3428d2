#include "qdf/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdf/errors.hpp"
#include "qdf/propagator.hpp"
#include "qdf/quadrature.hpp"

namespace qdf {

double norm(const ComplexField& psi) {
    return integrate(psi.density(), psi.grid().dx());
}

double center_of_mass(const ComplexField& psi) {
    const auto rho = psi.density();
    std::vector<double> xrho(rho.size());
    for (std::size_t j = 0; j < rho.size(); ++j) xrho[j] = psi.grid().x(j) * rho[j];
    const double n = integrate(rho, psi.grid().dx());
    if (!(n > 0.0)) throw config_error("center_of_mass: zero-norm field");
    return integrate(xrho, psi.grid().dx()) / n;
}

double peak_position(const ComplexField& psi) {
    const auto rho = psi.density();
    const auto it = std::max_element(rho.begin(), rho.end());
    return psi.grid().x(static_cast<std::size_t>(it - rho.begin()));
}

double density_at(const ComplexField& psi, double x_probe) {
    const SpatialGrid& g = psi.grid();
    if (!g.contains(x_probe)) {
        throw config_error("density_at: probe x=" + std::to_string(x_probe) + " outside grid");
    }
    const double pos = (x_probe - g.x_min()) / g.dx();
    const std::size_t j0 = std::min(static_cast<std::size_t>(pos), g.size() - 2);
    const double frac = pos - static_cast<double>(j0);
    const double r0 = std::norm(psi[j0]);
    const double r1 = std::norm(psi[j0 + 1]);
    return r0 + frac * (r1 - r0);
}

double shannon_entropy(const ComplexField& psi, const EntropyOptions& options) {
    const SpatialGrid& g = psi.grid();
    auto rho = psi.density();
    for (std::size_t j = 0; j < rho.size(); ++j) {
        const double x = g.x(j);
        if (x < options.window_lo || x > options.window_hi) rho[j] = 0.0;
    }
    const double mass = integrate(rho, g.dx());
    if (!(mass > 0.0)) throw config_error("shannon_entropy: zero-norm field (or empty window)");

    const double scale = options.normalized ? 1.0 / mass : 1.0;
    std::vector<double> integrand(rho.size(), 0.0);
    for (std::size_t j = 0; j < rho.size(); ++j) {
        const double r = rho[j] * scale;
        if (r >= 1e-300) integrand[j] = -r * std::log(r);
    }
    return integrate(integrand, g.dx());
}

EntropySeries entropy_series(const EvolutionRecord& record, const EntropyOptions& options) {
    if (record.snapshots.empty()) {
        throw config_error("entropy_series: record carries no snapshots");
    }
    EntropySeries out;
    out.times = record.times;
    out.entropy.reserve(record.snapshots.size());
    for (const auto& snap : record.snapshots) out.entropy.push_back(shannon_entropy(snap, options));
    if (out.times.size() != out.entropy.size()) {
        throw config_error("entropy_series: snapshot/time count mismatch");
    }
    return out;
}

}  // namespace qdf
