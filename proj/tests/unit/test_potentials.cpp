#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qdf/errors.hpp"
#include "qdf/potentials.hpp"

using namespace qdf;

TEST_CASE("gamma catalog") {
    SUBCASE("free space is identically zero") {
        const auto spec = PotentialSpec::free_space();
        for (double t : {0.0, 0.7, -3.0, 12.5}) CHECK(gamma(spec, t) == 0.0);
    }
    SUBCASE("constant trap: gamma(1) = -a/2") {
        const auto spec = PotentialSpec::constant_linear(9.8);
        CHECK(gamma(spec, 1.0) == doctest::Approx(-4.9).epsilon(1e-14));
    }
    SUBCASE("modulated trap at t=0 without the release offset") {
        const auto spec = PotentialSpec::modulated_linear(0.98, 0.3, 0.5, false);
        CHECK(gamma(spec, 0.0) == doctest::Approx(0.98 * 0.3 / 0.25).epsilon(1e-14));
        CHECK(gamma(spec, 0.0) == doctest::Approx(1.176).epsilon(1e-12));
    }
    SUBCASE("zero_initial_offset releases from x = 0") {
        const auto spec = PotentialSpec::modulated_linear(0.98, 0.3, 0.5, true);
        CHECK(gamma(spec, 0.0) == 0.0);
    }
}

TEST_CASE("gamma derivatives") {
    SUBCASE("constant trap: gamma'' = -a for all t") {
        const auto spec = PotentialSpec::constant_linear(9.8);
        for (double t : {0.0, 0.3, 2.0, 17.0}) CHECK(gamma_ddot(spec, t) == -9.8);
    }
    SUBCASE("modulated trap at t = pi/omega: gamma'' = -a(1-alpha)") {
        const auto spec = PotentialSpec::modulated_linear(2.0, 0.4, 0.7);
        const double t = std::numbers::pi / 0.7;
        CHECK(gamma_ddot(spec, t) == doctest::Approx(-2.0 * (1.0 - 0.4)).epsilon(1e-12));
    }
    SUBCASE("gamma'(0) = 0 for every variant (released at rest)") {
        CHECK(gamma_dot(PotentialSpec::free_space(), 0.0) == 0.0);
        CHECK(gamma_dot(PotentialSpec::constant_linear(3.0), 0.0) == 0.0);
        CHECK(gamma_dot(PotentialSpec::modulated_linear(3.0, 0.5, 1.3), 0.0) == 0.0);
    }
}

TEST_CASE("central differences of gamma match the analytic derivatives") {
    std::mt19937_64 rng(5);
    const auto specs = {PotentialSpec::constant_linear(9.8),
                        PotentialSpec::modulated_linear(0.98, 0.3, 0.5),
                        PotentialSpec::modulated_linear(9.8, 20.0, 1.0)};
    const double h = 1e-4;
    for (const auto& spec : specs) {
        for (int i = 0; i < 20; ++i) {
            const double t = 10.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double d1 = (gamma(spec, t + h) - gamma(spec, t - h)) / (2 * h);
            const double d2 = (gamma(spec, t + h) - 2 * gamma(spec, t) + gamma(spec, t - h)) / (h * h);
            CHECK(d1 == doctest::Approx(gamma_dot(spec, t)).epsilon(1e-6));
            CHECK(std::abs(d2 - gamma_ddot(spec, t)) < 1e-4);
        }
    }
}

TEST_CASE("potential_values") {
    const SpatialGrid grid = make_grid(1024, -25.0, 0.0488);
    SUBCASE("free space gives zeros") {
        for (double v : potential_values(PotentialSpec::free_space(), grid, 2.0)) CHECK(v == 0.0);
    }
    SUBCASE("constant trap a=0.98 at x=20") {
        const auto spec = PotentialSpec::constant_linear(0.98);
        const auto v = potential_values(spec, grid, 0.0);
        // locate the grid point closest to x = 20
        std::size_t j20 = 0;
        for (std::size_t j = 0; j < grid.size(); ++j) {
            if (std::abs(grid.x(j) - 20.0) < std::abs(grid.x(j20) - 20.0)) j20 = j;
        }
        CHECK(v[j20] == doctest::Approx(-0.98 * grid.x(j20)).epsilon(1e-14));
        CHECK(v[j20] == doctest::Approx(-19.6).epsilon(1e-3));
    }
    SUBCASE("modulated trap at t=0, x=1 gives -a(1+alpha)") {
        const SpatialGrid g1 = make_grid(4, 1.0, 0.5);  // x(0) = 1
        const auto spec = PotentialSpec::modulated_linear(9.8, 0.3, 0.5);
        const auto v = potential_values(spec, g1, 0.0);
        CHECK(v[0] == doctest::Approx(-12.74).epsilon(1e-12));
    }
}

TEST_CASE("consistency: the potential coefficient equals gamma'' everywhere") {
    std::mt19937_64 rng(17);
    const SpatialGrid grid = make_grid(64, -3.0, 0.1);
    for (int i = 0; i < 30; ++i) {
        const double a = 10.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double alpha = 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
        const double omega = 0.1 + 3.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double t = 8.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
        for (const auto& spec : {PotentialSpec::constant_linear(a),
                                 PotentialSpec::modulated_linear(a, alpha, omega)}) {
            const auto v = potential_values(spec, grid, t);
            const double coeff = gamma_ddot(spec, t);
            for (std::size_t j = 0; j < grid.size(); ++j) {
                CHECK(v[j] == coeff * grid.x(j));
            }
        }
    }
}

TEST_CASE("predict_trajectory") {
    SUBCASE("constant trap follows Newtonian free fall") {
        const auto spec = PotentialSpec::constant_linear(9.8);
        const auto traj = predict_trajectory(spec, {0.0, 1.0, 2.0});
        CHECK(traj.positions[0] == 0.0);
        CHECK(traj.positions[1] == doctest::Approx(4.9).epsilon(1e-14));
        CHECK(traj.positions[2] == doctest::Approx(19.6).epsilon(1e-14));
        CHECK(traj.velocities[1] == doctest::Approx(9.8).epsilon(1e-14));
    }
    SUBCASE("free space stays put") {
        const auto traj = predict_trajectory(PotentialSpec::free_space(), {0.0, 2.0, 5.0});
        for (double p : traj.positions) CHECK(p == 0.0);
        for (double v : traj.velocities) CHECK(v == 0.0);
    }
    SUBCASE("alpha = 0 reduces exactly to the constant trap") {
        const auto mod = PotentialSpec::modulated_linear(0.98, 0.0, 1.0);
        const auto con = PotentialSpec::constant_linear(0.98);
        std::vector<double> times{0.0, 0.5, 1.0, 2.5, 7.0};
        const auto tm = predict_trajectory(mod, times);
        const auto tc = predict_trajectory(con, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            CHECK(tm.positions[i] == tc.positions[i]);
            CHECK(tm.velocities[i] == tc.velocities[i]);
        }
    }
    SUBCASE("unsorted times are rejected") {
        CHECK_THROWS_AS(predict_trajectory(PotentialSpec::free_space(), {1.0, 0.5}), config_error);
    }
}

TEST_CASE("strong modulation makes the fall non-monotonic: arrival, retreat, return") {
    // a = 0.98, alpha = 20, omega = 1 oscillates with amplitude
    // a alpha / omega^2 = 19.6 around the parabola, so heights inside that
    // band are visited repeatedly and the droplet reaches a fixed height
    // earlier than the unmodulated fall does
    const auto spec = PotentialSpec::modulated_linear(0.98, 20.0, 1.0);
    std::vector<double> times;
    for (int i = 0; i <= 2400; ++i) times.push_back(12.0 * i / 2400.0);
    const auto mod = predict_trajectory(spec, times);
    const auto plain = predict_trajectory(PotentialSpec::constant_linear(0.98), times);

    auto crossings = [&](const std::vector<double>& xs, double level) {
        int n = 0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            if ((xs[i - 1] < level) != (xs[i] < level)) ++n;
        }
        return n;
    };
    auto first_at = [&](const std::vector<double>& xs, double level) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (xs[i] >= level) return times[i];
        }
        return times.back();
    };

    CHECK(crossings(mod.positions, 30.0) >= 3);    // arrival, retreat, return
    CHECK(crossings(plain.positions, 30.0) == 1);  // plain fall is monotone
    bool retreats = false;
    for (std::size_t i = 1; i < mod.positions.size(); ++i) {
        if (mod.positions[i] < mod.positions[i - 1]) retreats = true;
    }
    CHECK(retreats);
    CHECK(first_at(mod.positions, 50.0) < first_at(plain.positions, 50.0));
}

TEST_CASE("zero_initial_offset shifts gamma by a constant only") {
    const auto with = PotentialSpec::modulated_linear(9.8, 0.3, 0.5, true);
    const auto without = PotentialSpec::modulated_linear(9.8, 0.3, 0.5, false);
    const double offset = gamma(without, 0.0) - gamma(with, 0.0);
    for (double t : {0.0, 0.3, 1.7, 4.0}) {
        CHECK(gamma(without, t) - gamma(with, t) == doctest::Approx(offset).epsilon(1e-14));
        CHECK(gamma_dot(without, t) == gamma_dot(with, t));
        CHECK(gamma_ddot(without, t) == gamma_ddot(with, t));
    }
}

TEST_CASE("modulated trap requires a positive drive frequency") {
    CHECK_THROWS_AS(PotentialSpec::modulated_linear(1.0, 0.1, 0.0), config_error);
    CHECK_THROWS_AS(PotentialSpec::constant_linear(-2.0), config_error);
}
