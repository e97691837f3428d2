#include "qdf/potentials.hpp"

#include <cmath>

#include "qdf/errors.hpp"

namespace qdf {

PotentialSpec PotentialSpec::free_space() {
    return PotentialSpec{};
}

PotentialSpec PotentialSpec::constant_linear(double a) {
    PotentialSpec s;
    s.variant = TrapVariant::ConstantLinear;
    s.a = a;
    s.validate();
    return s;
}

PotentialSpec PotentialSpec::modulated_linear(double a, double alpha, double omega,
                                              bool zero_initial_offset) {
    PotentialSpec s;
    s.variant = TrapVariant::ModulatedLinear;
    s.a = a;
    s.alpha = alpha;
    s.omega = omega;
    s.zero_initial_offset = zero_initial_offset;
    s.validate();
    return s;
}

void PotentialSpec::validate() const {
    if (!std::isfinite(a) || !std::isfinite(alpha) || !std::isfinite(omega)) {
        throw config_error("potential: parameters must be finite");
    }
    if (variant != TrapVariant::FreeSpace && a < 0.0) {
        throw config_error("potential: strength a must be >= 0");
    }
    if (variant == TrapVariant::ModulatedLinear && !(omega > 0.0)) {
        throw config_error("potential: modulated trap requires omega > 0");
    }
}

double gamma(const PotentialSpec& spec, double t) {
    switch (spec.variant) {
        case TrapVariant::FreeSpace:
            return 0.0;
        case TrapVariant::ConstantLinear:
            return -0.5 * spec.a * t * t;
        case TrapVariant::ModulatedLinear: {
            const double osc = spec.a * spec.alpha / (spec.omega * spec.omega);
            double g = -0.5 * spec.a * t * t + osc * std::cos(spec.omega * t);
            if (spec.zero_initial_offset) g -= osc;  // gamma(0) = osc
            return g;
        }
    }
    return 0.0;
}

double gamma_dot(const PotentialSpec& spec, double t) {
    switch (spec.variant) {
        case TrapVariant::FreeSpace:
            return 0.0;
        case TrapVariant::ConstantLinear:
            return -spec.a * t;
        case TrapVariant::ModulatedLinear:
            return -spec.a * t - (spec.a * spec.alpha / spec.omega) * std::sin(spec.omega * t);
    }
    return 0.0;
}

double gamma_ddot(const PotentialSpec& spec, double t) {
    switch (spec.variant) {
        case TrapVariant::FreeSpace:
            return 0.0;
        case TrapVariant::ConstantLinear:
            return -spec.a;
        case TrapVariant::ModulatedLinear:
            return -spec.a * (1.0 + spec.alpha * std::cos(spec.omega * t));
    }
    return 0.0;
}

std::vector<double> potential_values(const PotentialSpec& spec, const SpatialGrid& grid, double t) {
    const double coeff = gamma_ddot(spec, t);
    std::vector<double> v(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) v[j] = coeff * grid.x(j);
    return v;
}

TrajectoryPrediction predict_trajectory(const PotentialSpec& spec, std::vector<double> times) {
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] >= times[i - 1])) {
            throw config_error("trajectory: times must be sorted ascending");
        }
    }
    TrajectoryPrediction out;
    out.times = std::move(times);
    out.positions.reserve(out.times.size());
    out.velocities.reserve(out.times.size());
    for (double t : out.times) {
        out.positions.push_back(-gamma(spec, t));
        out.velocities.push_back(-gamma_dot(spec, t));
    }
    return out;
}

}  // namespace qdf
