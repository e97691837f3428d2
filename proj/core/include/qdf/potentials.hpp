#pragma once

#include <vector>

#include "qdf/grid.hpp"

namespace qdf {

enum class TrapVariant { FreeSpace, ConstantLinear, ModulatedLinear };

/// Description of the linear trap V(x,t) = a(t) x through its modulation
/// function gamma(t), with a(t) = gamma''(t).
///
/// The user-facing strength `a` is non-negative; the sign that drives the
/// droplet toward +x is applied internally, so a = 9.8 falls the way the
/// strength-9.8 runs do. With zero_initial_offset set (default), the
/// modulated gamma is shifted by a constant so the droplet is released from
/// x = 0; gamma' and gamma'' are unaffected.
struct PotentialSpec {
    TrapVariant variant = TrapVariant::FreeSpace;
    double a = 0.0;       ///< acceleration strength, >= 0
    double alpha = 0.0;   ///< modulation amplitude (real, may be negative)
    double omega = 0.0;   ///< drive frequency, > 0 for ModulatedLinear
    bool zero_initial_offset = true;

    static PotentialSpec free_space();
    static PotentialSpec constant_linear(double a);
    static PotentialSpec modulated_linear(double a, double alpha, double omega,
                                          bool zero_initial_offset = true);

    void validate() const;  ///< throws config_error on bad parameters
};

/// gamma(t):
///   FreeSpace:       0
///   ConstantLinear:  -a t^2 / 2
///   ModulatedLinear: -a t^2 / 2 + (a alpha / omega^2) cos(omega t)
///                    [minus gamma(0) when zero_initial_offset]
double gamma(const PotentialSpec& spec, double t);

/// First derivative gamma'(t); gamma'(0) = 0 for every variant.
double gamma_dot(const PotentialSpec& spec, double t);

/// Second derivative gamma''(t) = a(t), the linear-potential coefficient:
///   ConstantLinear -> -a, ModulatedLinear -> -a (1 + alpha cos(omega t)).
double gamma_ddot(const PotentialSpec& spec, double t);

/// Samples V(x_j, t) = gamma''(t) * x_j on the grid.
std::vector<double> potential_values(const PotentialSpec& spec, const SpatialGrid& grid, double t);

struct TrajectoryPrediction {
    std::vector<double> times;
    std::vector<double> positions;   ///< x_cm(t) = -gamma(t)
    std::vector<double> velocities;  ///< -gamma'(t)
};

/// Closed-form centre-of-mass trajectory; takes no interaction or atom
/// number input. Times must be sorted ascending.
TrajectoryPrediction predict_trajectory(const PotentialSpec& spec, std::vector<double> times);

}  // namespace qdf
