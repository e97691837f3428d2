#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "qdf/config.hpp"
#include "qdf/csv.hpp"
#include "qdf/errors.hpp"

using namespace qdf;
using nlohmann::json;

TEST_CASE("empty document yields the full-default config") {
    const RunConfig cfg = parse_config("");
    CHECK(cfg.potential.variant == TrapVariant::FreeSpace);
    CHECK(cfg.droplet_norm.value_or(-1.0) == 1.0);
    CHECK_FALSE(cfg.droplet_mu_ratio.has_value());
    CHECK(cfg.grid_n == 4096);
    CHECK(cfg.grid_dx == 0.0488);
    CHECK(cfg.dt == 1e-4);
    CHECK(cfg.n_steps == 10000);
    CHECK(cfg.convention == KineticConvention::HalfLaplacian);
    // default droplet is the N = 1 droplet in free space
    const DropletParams p = cfg.resolve_droplet();
    CHECK(analytic_norm(p) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fig5-style document parses into a modulated trap") {
    const RunConfig cfg = parse_config(R"({
        "potential": {"a": 9.8, "alpha": 0.3, "omega": 0.5}
    })");
    CHECK(cfg.potential.variant == TrapVariant::ModulatedLinear);
    CHECK(cfg.potential.a == 9.8);
    CHECK(cfg.potential.alpha == 0.3);
    CHECK(cfg.potential.omega == 0.5);
    CHECK(cfg.potential.zero_initial_offset);
}

TEST_CASE("alpha under an explicit constant variant names the conflict") {
    try {
        parse_config(R"({"potential": {"variant": "constant", "a": 1.0, "alpha": 0.3}})");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("potential.alpha") != std::string::npos);
        CHECK(msg.find("constant") != std::string::npos);
    }
}

TEST_CASE("unknown keys are rejected with their path") {
    try {
        parse_config(R"({"grid": {"n": 512, "dy": 0.1}})");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("grid.dy") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config(R"({"gird": {}})"), config_error);
}

TEST_CASE("N and mu_ratio are mutually exclusive") {
    CHECK_THROWS_AS(parse_config(R"({"droplet": {"N": 1.0, "mu_ratio": 0.5}})"), config_error);
    const RunConfig by_ratio = parse_config(R"({"droplet": {"mu_ratio": 0.5, "G1": 1.0, "G2": 1.0}})");
    CHECK(by_ratio.droplet_mu_ratio.value_or(-1.0) == 0.5);
    CHECK_FALSE(by_ratio.droplet_norm.has_value());
}

TEST_CASE("figure-parameter adapter resolves figure-style signs") {
    const RunConfig cfg = parse_config(R"({
        "droplet": {"mu_ratio": 1.0, "G1": -1.0, "G2": 0.9999}
    })");
    const DropletParams p = cfg.resolve_droplet();
    CHECK(p.G1 == 1.0);
    CHECK(p.G2 == 0.9999);
    CHECK(p.flat_top_ratio() == doctest::Approx(0.9999).epsilon(1e-12));
    CHECK(p.E < 0.0);
}

TEST_CASE("malformed documents and invariant violations") {
    CHECK_THROWS_AS(parse_config("{not json"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"n": 1000}})"), config_error);   // not a power of 2
    CHECK_THROWS_AS(parse_config(R"({"evolution": {"dt": -1.0}})"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"noise": {"fraction": 1.5}})"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"potential": {"variant": "harmonic"}})"), config_error);
    CHECK_THROWS_AS(parse_config(R"({"droplet": {"convention": "quarter"}})"), config_error);
}

TEST_CASE("dotted overrides") {
    json doc = json::object();
    apply_override(doc, "potential.a", "9.8");
    apply_override(doc, "potential.variant", "constant");
    apply_override(doc, "seed", "99");
    apply_override(doc, "diagnostics.probes", "[10, 20]");
    CHECK(doc["potential"]["a"] == 9.8);
    CHECK(doc["potential"]["variant"] == "constant");
    CHECK(doc["seed"] == 99);
    CHECK(doc["diagnostics"]["probes"].size() == 2);

    const RunConfig cfg = parse_config_json(doc);
    CHECK(cfg.potential.variant == TrapVariant::ConstantLinear);
    CHECK(cfg.potential.a == 9.8);
    CHECK(cfg.seed == 99);
    CHECK(cfg.probes == std::vector<double>{10.0, 20.0});
}

TEST_CASE("resolved config round-trips through JSON") {
    const RunConfig cfg = parse_config(R"({
        "grid": {"n": 1024, "dx": 0.05},
        "droplet": {"N": 3.0, "G1": -1.0, "G2": 0.9999},
        "potential": {"a": 0.98, "alpha": 0.3, "omega": 0.5},
        "evolution": {"dt": 0.0002, "n_steps": 500, "record_every": 50},
        "diagnostics": {"probes": [20.0], "entropy": {"normalized": true, "window_lo": 20.0}},
        "seed": 7
    })");
    const json doc = cfg.to_json();
    const RunConfig back = parse_config_json(doc);
    CHECK(back.to_json() == doc);
}

TEST_CASE("csv headers are pinned") {
    CHECK(std::string(csv_header::kTimeSeries) == "t,norm,x_cm,x_peak,S_rho");
    CHECK(std::string(csv_header::kSnapshot) == "x,re,im,density");
    CHECK(std::string(csv_header::kProbe) == "t,density");
    CHECK(std::string(csv_header::kEntropy) == "t,S_rho");
    CHECK(std::string(csv_header::kStability) == "x,clean_density,mean_noisy_density,sd");
}

TEST_CASE("floats are emitted with 17 significant digits") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(4.9) == "4.9000000000000004");
}
