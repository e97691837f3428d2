#include "qdf/droplet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qdf/errors.hpp"
#include "qdf/fft.hpp"

namespace qdf {

double DropletParams::decay_rate() const {
    return convention == KineticConvention::HalfLaplacian ? std::sqrt(-2.0 * E) : std::sqrt(-E);
}

double DropletParams::cosh_coefficient() const {
    return std::sqrt(1.0 - flat_top_ratio());
}

DropletParams DropletParams::from_mu_ratio(double mu_ratio, double G1, double G2,
                                           KineticConvention conv) {
    DropletParams p;
    p.G1 = G1;
    p.G2 = G2;
    p.mu = kMuReference * mu_ratio;
    p.E = p.mu * G1;
    p.convention = conv;
    p.validate();
    return p;
}

DropletParams DropletParams::from_norm(double N, double G1, double G2, KineticConvention conv) {
    if (!(N > 0.0)) throw config_error("droplet: atom number must be positive");
    if (!(G1 > 0.0) || !(G2 > 0.0)) throw config_error("droplet: couplings must be positive");
    // invert N = prefactor * norm_of_mu(s) for the flat-top ratio s, then
    // recover mu/mu0 = s G1/G2
    double prefactor = G1 / std::pow(G2, 1.5);
    if (conv == KineticConvention::FullLaplacian) prefactor *= std::sqrt(2.0);
    const double s = mu_of_norm(N / prefactor);
    return from_mu_ratio(s * G1 / G2, G1, G2, conv);
}

void DropletParams::validate() const {
    if (mu0 != kMuReference) throw config_error("droplet: mu0 must equal -2/9");
    if (!(G1 > 0.0) || !(G2 > 0.0)) {
        throw config_error("droplet: couplings must be positive in the canonical convention");
    }
    if (!(E < 0.0)) throw config_error("droplet: stationary eigenvalue must be negative");
    const double s = flat_top_ratio();
    if (!(s > 0.0) || s > 1.0) {
        throw config_error("droplet: flat-top ratio (mu/mu0)(G2/G1) = " + std::to_string(s) +
                           " outside (0, 1]");
    }
}

DropletState DropletState::make(DropletParams params, PotentialSpec potential) {
    params.validate();
    potential.validate();
    DropletState st;
    st.params = params;
    st.potential = potential;
    st.norm = analytic_norm(params);
    return st;
}

double profile_value(const DropletParams& params, double eta) {
    return params.amplitude() / (1.0 + params.cosh_coefficient() * std::cosh(params.decay_rate() * eta));
}

std::vector<double> stationary_profile(const DropletParams& params, const SpatialGrid& grid) {
    params.validate();
    std::vector<double> u(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) u[j] = profile_value(params, grid.x(j));
    return u;
}

double stationary_residual(const std::vector<double>& U, const DropletParams& params,
                           const SpatialGrid& grid) {
    if (U.size() != grid.size()) throw config_error("residual: field size does not match grid");
    double umax = 0.0;
    for (double v : U) umax = std::max(umax, std::abs(v));
    const double edge = std::max(std::abs(U.front()), std::abs(U.back()));
    if (umax > 0.0 && edge > 1e-10 * std::max(1.0, umax)) {
        throw config_error("residual: profile tails not decayed at grid boundaries");
    }

    std::vector<complex> d2(U.size());
    for (std::size_t j = 0; j < U.size(); ++j) d2[j] = complex(U[j], 0.0);
    Fft fft(grid.size());
    spectral_second_derivative(fft, grid.k_values(), d2);

    const double c = params.convention == KineticConvention::HalfLaplacian ? 0.5 : 1.0;
    double linf = 0.0;
    for (std::size_t j = 0; j < U.size(); ++j) {
        const double u = U[j];
        const double r = -c * d2[j].real() - params.G1 * std::abs(u) * u +
                         params.G2 * std::abs(u) * std::abs(u) * u - params.E * u;
        linf = std::max(linf, std::abs(r));
    }
    return linf;
}

double phase_integral(const PotentialSpec& spec, double t) {
    switch (spec.variant) {
        case TrapVariant::FreeSpace:
            return 0.0;
        case TrapVariant::ConstantLinear:
            return spec.a * spec.a * t * t * t / 3.0;
        case TrapVariant::ModulatedLinear: {
            // gamma'(s) = -a s - (a alpha / omega) sin(omega s)
            const double a = spec.a, al = spec.alpha, w = spec.omega;
            const double cross =
                2.0 * a * a * al / w * (std::sin(w * t) / (w * w) - t * std::cos(w * t) / w);
            const double sin2 =
                a * a * al * al / (w * w) * (0.5 * t - std::sin(2.0 * w * t) / (4.0 * w));
            return a * a * t * t * t / 3.0 + cross + sin2;
        }
    }
    return 0.0;
}

ComplexField full_wavefunction(const DropletState& state, std::shared_ptr<const SpatialGrid> grid,
                               double t) {
    if (!grid) throw config_error("full_wavefunction: null grid");
    const DropletParams& p = state.params;
    const double g = gamma(state.potential, t);
    const double gd = gamma_dot(state.potential, t);
    const double center = -g;
    const double margin = 10.0 / p.decay_rate();
    if (center - margin < grid->x_min() || center + margin > grid->x_max()) {
        throw config_error("full_wavefunction: droplet centre within 10/k of a grid boundary at t=" +
                           std::to_string(t));
    }

    const double phase_t = -0.5 * (phase_integral(state.potential, t) + p.E * t);
    std::vector<complex> vals(grid->size());
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double x = grid->x(j);
        const double env = profile_value(p, x + g);
        vals[j] = std::polar(env, -gd * x + phase_t);
    }
    return ComplexField(std::move(grid), std::move(vals));
}

double norm_of_mu(double mu_ratio) {
    if (!(mu_ratio > 0.0) || !(mu_ratio < 1.0)) {
        throw config_error("norm_of_mu: mu ratio must lie in (0, 1)");
    }
    const double sr = std::sqrt(mu_ratio);
    return 4.0 / 3.0 * (std::log((1.0 + sr) / std::sqrt(1.0 - mu_ratio)) - sr);
}

double mu_of_norm(double N) {
    if (!(N > 0.0)) throw config_error("mu_of_norm: atom number must be positive");
    double lo = 1e-300;
    double hi = 1.0;
    // N(r) is strictly increasing with N(0+) = 0 and N(1-) = +inf, so plain
    // bisection on r converges to machine precision
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-17 * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        double val;
        if (mid <= 0.0) {
            val = 0.0;
        } else if (mid >= 1.0) {
            val = std::numeric_limits<double>::infinity();
        } else {
            val = norm_of_mu(mid);
        }
        (val < N ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double analytic_norm(const DropletParams& params) {
    const double s = params.flat_top_ratio();
    double prefactor = params.G1 / std::pow(params.G2, 1.5);
    if (params.convention == KineticConvention::FullLaplacian) prefactor *= std::sqrt(2.0);
    if (s >= 1.0) return std::numeric_limits<double>::infinity();
    return prefactor * norm_of_mu(s);
}

EgpeCouplings egpe_couplings(const DropletParams& params) {
    if (params.convention == KineticConvention::HalfLaplacian) {
        return EgpeCouplings{params.G1, params.G2};
    }
    return EgpeCouplings{0.5 * params.G1, 0.5 * params.G2};
}

}  // namespace qdf
