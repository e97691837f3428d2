#pragma once

namespace qdf {

/// Physical inputs of the binary mixture, SI units. Everything downstream
/// works in transverse-oscillator units; this record is the only place
/// dimensional quantities enter.
struct DimensionalInputs {
    double mass_kg = 0.0;         ///< atomic mass m
    double omega_perp = 0.0;      ///< transverse trap frequency, rad/s
    double g_intra = 0.0;         ///< intra-component coupling g, J*m
    double delta_g = 0.0;         ///< residual coupling delta g = g_ud + sqrt(g_uu g_dd), J*m
};

struct DimensionlessCouplings {
    double g1 = 0.0;  ///< quadratic (BMF) strength
    double g2 = 0.0;  ///< cubic (EMF) strength
};

/// Maps the dimensional mixture parameters onto the dimensionless couplings
/// of the 1D equation:
///   g2 = (delta_g / 2) * sqrt(m / (omega^3 hbar^3))
///   g1 = (1/pi) * (m g^2 / (omega hbar^3))^(3/4)
/// Throws config_error for non-positive inputs (delta_g > 0 is the droplet
/// existence condition).
DimensionlessCouplings dimensionless_couplings(const DimensionalInputs& in);

}  // namespace qdf
