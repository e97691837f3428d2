#include "qdf/couplings.hpp"

#include <cmath>
#include <numbers>

#include "qdf/errors.hpp"

namespace qdf {

namespace {
constexpr double kHbar = 1.054571817e-34;  // J*s (CODATA 2018)
}

DimensionlessCouplings dimensionless_couplings(const DimensionalInputs& in) {
    if (!(in.mass_kg > 0.0)) throw config_error("couplings: mass must be positive");
    if (!(in.omega_perp > 0.0)) throw config_error("couplings: omega_perp must be positive");
    if (!(in.g_intra > 0.0)) throw config_error("couplings: g_intra must be positive");
    if (!(in.delta_g > 0.0)) {
        throw config_error("couplings: delta_g must be positive (droplet existence)");
    }

    const double h3 = kHbar * kHbar * kHbar;
    DimensionlessCouplings out;
    out.g2 = 0.5 * in.delta_g *
             std::sqrt(in.mass_kg / (in.omega_perp * in.omega_perp * in.omega_perp * h3));
    out.g1 = (1.0 / std::numbers::pi) *
             std::pow(in.mass_kg * in.g_intra * in.g_intra / (in.omega_perp * h3), 0.75);
    return out;
}

}  // namespace qdf
