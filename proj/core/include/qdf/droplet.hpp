#pragma once

#include <vector>

#include "qdf/field.hpp"
#include "qdf/grid.hpp"
#include "qdf/potentials.hpp"

namespace qdf {

/// Kinetic-term normalization of the stationary problem. HalfLaplacian is
/// the resolved, canonical pairing (matches the evolution equation with the
/// 1/2 kinetic factor); FullLaplacian keeps the bare second derivative.
/// The two differ in the profile decay rate and in the residual operator.
enum class KineticConvention { HalfLaplacian, FullLaplacian };

inline constexpr double kMuReference = -2.0 / 9.0;  ///< mu_0

/// Droplet parameter record under the canonical sign convention:
/// G1, G2 > 0, mu < 0, E = mu * G1 < 0. The flat-top ratio
/// s = (mu/mu0)(G2/G1) must lie in (0, 1] for a normalizable profile.
struct DropletParams {
    double mu = 0.0;
    double mu0 = kMuReference;
    double G1 = 1.0;  ///< quadratic (BMF) constant
    double G2 = 1.0;  ///< cubic (EMF) constant
    double E = 0.0;   ///< stationary eigenvalue, < 0
    KineticConvention convention = KineticConvention::HalfLaplacian;

    double mu_ratio() const { return mu / mu0; }
    double flat_top_ratio() const { return mu_ratio() * G2 / G1; }

    /// Profile amplitude A = -3 mu (> 0), identical for both conventions.
    double amplitude() const { return -3.0 * mu; }

    /// Tail decay rate k: sqrt(-2E) (HalfLaplacian) or sqrt(-E) (FullLaplacian).
    double decay_rate() const;

    /// cosh coefficient B = sqrt(1 - s).
    double cosh_coefficient() const;

    /// Builds params from mu/mu0 and positive couplings; validates invariants.
    static DropletParams from_mu_ratio(double mu_ratio, double G1, double G2,
                                       KineticConvention conv = KineticConvention::HalfLaplacian);

    /// Builds params with the atom number fixed to N exactly: inverts the
    /// closed-form norm (including the G1/G2 prefactor) for mu.
    static DropletParams from_norm(double N, double G1, double G2,
                                   KineticConvention conv = KineticConvention::HalfLaplacian);

    void validate() const;
};

/// Analytic droplet in a linear trap, with its exact atom number.
struct DropletState {
    DropletParams params;
    PotentialSpec potential;
    double norm = 0.0;

    static DropletState make(DropletParams params, PotentialSpec potential);
};

/// Profile value U(eta) = A / (1 + B cosh(k eta)).
double profile_value(const DropletParams& params, double eta);

/// Samples the stationary profile on the grid (centred at eta = 0).
std::vector<double> stationary_profile(const DropletParams& params, const SpatialGrid& grid);

/// L-infinity norm of  -c U'' - G1 |U| U + G2 |U|^2 U - E U  with the
/// spectral second derivative; c = 1/2 or 1 per convention. Requires the
/// sampled tails to be decayed at the grid edges (wrap-around otherwise
/// dominates the derivative).
double stationary_residual(const std::vector<double>& U, const DropletParams& params,
                           const SpatialGrid& grid);

/// Integral of gamma'(s)^2 over [0, t], in closed form per trap variant.
double phase_integral(const PotentialSpec& spec, double t);

/// Exact traveling solution: envelope U(x + gamma(t)) with phase
/// theta(x,t) = -gamma'(t) x - (1/2) [ integral of gamma'^2 + E t ].
/// Throws if the droplet centre sits within 10/k of a grid boundary.
ComplexField full_wavefunction(const DropletState& state, std::shared_ptr<const SpatialGrid> grid,
                               double t);

/// Atom number as a function of r = mu/mu0 for the unit-coupling droplet:
///   N(r) = (4/3) [ ln((1 + sqrt(r)) / sqrt(1 - r)) - sqrt(r) ],  r in (0,1).
/// Strictly increasing; diverges logarithmically as r -> 1.
double norm_of_mu(double mu_ratio);

/// Inverse of norm_of_mu by bisection; round-trips to 1e-10 for moderate N.
/// Near the flat-top the map is exponentially ill-conditioned (dN/dr grows
/// like e^{3N/2}), so very large atom numbers resolve only to ~e^{3N/2} eps.
double mu_of_norm(double N);

/// Exact atom number of the profile implied by params:
///   N = (G1 / G2^{3/2}) * norm_of_mu(s), times sqrt(2) under FullLaplacian.
double analytic_norm(const DropletParams& params);

/// Couplings for the evolution equation under which full_wavefunction is an
/// exact solution: (G1, G2) for HalfLaplacian, (G1/2, G2/2) for FullLaplacian.
struct EgpeCouplings {
    double g1 = 0.0;
    double g2 = 0.0;
};
EgpeCouplings egpe_couplings(const DropletParams& params);

}  // namespace qdf
