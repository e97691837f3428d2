#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qdf/diagnostics.hpp"
#include "qdf/droplet.hpp"
#include "qdf/errors.hpp"
#include "qdf/fft.hpp"
#include "qdf/wigner.hpp"

using namespace qdf;

namespace {

std::shared_ptr<const SpatialGrid> centered(std::size_t n, double dx) {
    return std::make_shared<const SpatialGrid>(make_centered_grid(n, dx));
}

ComplexField real_gaussian(std::shared_ptr<const SpatialGrid> grid, double sigma) {
    std::vector<complex> v(grid->size());
    const double amp = std::pow(std::numbers::pi * sigma * sigma, -0.25);
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double x = grid->x(j);
        v[j] = amp * std::exp(-x * x / (2.0 * sigma * sigma));
    }
    return ComplexField(std::move(grid), std::move(v));
}

/// direct-quadrature momentum density |psi_tilde(p)|^2 with the
/// sqrt(2 pi)-symmetric transform convention
double spectral_density(const ComplexField& psi, double p) {
    complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < psi.size(); ++j) {
        acc += psi[j] * std::polar(1.0, -p * psi.grid().x(j));
    }
    acc *= psi.grid().dx() / std::sqrt(2.0 * std::numbers::pi);
    return std::norm(acc);
}

}  // namespace

TEST_CASE("Gaussian Wigner matches the closed form everywhere") {
    const double sigma = 1.0;
    auto grid = centered(512, 0.0488);
    const ComplexField psi = real_gaussian(grid, sigma);
    const WignerMap map = wigner(psi, -8.0, 8.0, 161);

    double linf = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const double x = grid->x(i);
        for (std::size_t j = 0; j < map.n_p(); ++j) {
            const double p = map.p_values[j];
            const double exact =
                std::exp(-x * x / (sigma * sigma) - p * p * sigma * sigma) / std::numbers::pi;
            linf = std::max(linf, std::abs(map.at(i, j) - exact));
        }
    }
    CHECK(linf < 1e-8);
    // everywhere positive for a Gaussian
    for (double w : map.values) CHECK(w > -1e-12);
}

TEST_CASE("marginals and mass") {
    const auto p = DropletParams::from_norm(1.0, 1.0, 1.0);
    auto grid = centered(4096, 0.0488);
    const auto state = DropletState::make(p, PotentialSpec::free_space());
    const ComplexField psi = full_wavefunction(state, grid, 0.0);
    const WignerMap map = wigner(psi, -10.0, 10.0, 256);

    // x-marginal reproduces the density
    const auto xmarg = map.x_marginal();
    const auto rho = psi.density();
    double linf_x = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        linf_x = std::max(linf_x, std::abs(xmarg[i] - rho[i]));
    }
    CHECK(linf_x < 1e-6);

    // p-marginal reproduces the spectral density
    const auto pmarg = map.p_marginal();
    double linf_p = 0.0;
    for (std::size_t j = 0; j < map.n_p(); ++j) {
        linf_p = std::max(linf_p, std::abs(pmarg[j] - spectral_density(psi, map.p_values[j])));
    }
    CHECK(linf_p < 1e-5);

    // total mass equals the norm
    CHECK(map.mass == doctest::Approx(norm(psi)).epsilon(1e-6));
}

TEST_CASE("Wigner of a real even field is symmetric in x and p") {
    const auto p = DropletParams::from_mu_ratio(0.5, 1.0, 1.0);
    auto grid = centered(2048, 0.065);
    const auto state = DropletState::make(p, PotentialSpec::free_space());
    const ComplexField psi = full_wavefunction(state, grid, 0.0);
    // symmetric p-grid including p = 0
    const WignerMap map = wigner(psi, -6.0, 6.0, 241);

    const std::size_t n = grid->size();
    const std::size_t np = map.n_p();
    for (std::size_t i = 1; i < n; i += 37) {
        for (std::size_t j = 0; j < np; j += 11) {
            CHECK(std::abs(map.at(i, j) - map.at(i, np - 1 - j)) < 1e-10);  // p -> -p
            CHECK(std::abs(map.at(i, j) - map.at(n - i, j)) < 1e-10);      // x -> -x
        }
    }
    CHECK(map.imag_residue < 1e-12);
}

TEST_CASE("plane-wave phases translate the map along p") {
    auto grid = centered(1024, 0.04);
    const ComplexField psi = real_gaussian(grid, 0.8);
    const double dk = 2.0 * std::numbers::pi / grid->length();
    const double p0 = 40.0 * dk;  // exactly representable shift

    std::vector<complex> shifted(psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) {
        shifted[j] = psi[j] * std::polar(1.0, p0 * grid->x(j));
    }
    const ComplexField psi_shift(grid, std::move(shifted));

    const WignerMap base = wigner(psi, -6.0, 6.0, 121);
    const WignerMap moved = wigner(psi_shift, -6.0 + p0, 6.0 + p0, 121);
    double linf = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < base.n_p(); ++j) {
            linf = std::max(linf, std::abs(moved.at(i, j) - base.at(i, j)));
        }
    }
    CHECK(linf < 1e-9);
}

TEST_CASE("droplet under gravity at t=1 shows one lobe near (4.9, 9.8)") {
    const auto p = DropletParams::from_norm(1.0, 1.0, 1.0);
    auto grid = centered(4096, 0.0488);
    const auto state = DropletState::make(p, PotentialSpec::constant_linear(9.8));
    const ComplexField psi = full_wavefunction(state, grid, 1.0);
    const WignerMap map = wigner(psi, 9.8 - 10.0, 9.8 + 10.0, 256);

    double best = -1e30;
    double best_x = 0.0, best_p = 0.0;
    for (std::size_t i = 0; i < grid->size(); ++i) {
        for (std::size_t j = 0; j < map.n_p(); ++j) {
            if (map.at(i, j) > best) {
                best = map.at(i, j);
                best_x = grid->x(i);
                best_p = map.p_values[j];
            }
        }
    }
    CHECK(best > 0.0);
    CHECK(best_x == doctest::Approx(4.9).epsilon(0.05 / 4.9));
    CHECK(best_p == doctest::Approx(9.8).epsilon(0.1 / 9.8));
}

TEST_CASE("quasi-probability goes negative for a two-lobe superposition") {
    auto grid = centered(1024, 0.04);
    std::vector<complex> v(grid->size());
    const double amp = std::pow(std::numbers::pi, -0.25);
    for (std::size_t j = 0; j < grid->size(); ++j) {
        const double x = grid->x(j);
        v[j] = amp * (std::exp(-(x - 3) * (x - 3) / 2.0) + std::exp(-(x + 3) * (x + 3) / 2.0));
    }
    const ComplexField cat(grid, std::move(v));
    const WignerMap map = wigner(cat, -6.0, 6.0, 201);
    double most_negative = 0.0;
    for (double w : map.values) most_negative = std::min(most_negative, w);
    // interference fringes midway between the lobes dip well below zero
    CHECK(most_negative < -0.1);
}

TEST_CASE("momentum windows that miss the field are typed errors") {
    const auto p = DropletParams::from_norm(1.0, 1.0, 1.0);
    auto grid = centered(2048, 0.0488);
    const auto state = DropletState::make(p, PotentialSpec::constant_linear(9.8));
    // at t = 1 the field carries momentum ~ 9.8; a window around zero misses it
    const ComplexField psi = full_wavefunction(state, grid, 1.0);
    try {
        wigner(psi, -2.0, 2.0, 64);
        FAIL("expected wigner_window_error");
    } catch (const wigner_window_error& e) {
        CHECK(e.mass_deficit > 0.5);
    }
}

TEST_CASE("input validation") {
    auto grid = centered(256, 0.05);
    const ComplexField psi = real_gaussian(grid, 0.5);
    CHECK_THROWS_AS(wigner(psi, -1.0, 1.0, 1), config_error);
    CHECK_THROWS_AS(wigner(psi, 1.0, -1.0, 64), config_error);
    const ComplexField zero(grid);
    CHECK_THROWS_AS(wigner(zero, -1.0, 1.0, 64), config_error);
}
