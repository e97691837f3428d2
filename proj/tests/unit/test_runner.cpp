#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qdf/config.hpp"
#include "qdf/errors.hpp"
#include "qdf/manifest.hpp"
#include "qdf/runner.hpp"

using namespace qdf;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "qdf_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json tiny_run_doc(const fs::path& out) {
    json doc;
    doc["grid"] = {{"n", 512}, {"dx", 0.065}};
    doc["droplet"] = {{"N", 1.0}, {"G1", 1.0}, {"G2", 1.0}};
    doc["potential"] = {{"variant", "constant"}, {"a", 2.0}};
    doc["evolution"] = {{"dt", 5e-4}, {"n_steps", 100}, {"record_every", 20}};
    doc["diagnostics"] = {{"probes", {1.0}}};
    doc["output_dir"] = out.string();
    doc["seed"] = 11;
    return doc;
}

}  // namespace

TEST_CASE("run() writes the manifest last with a checksummed inventory") {
    const fs::path dir = fresh_dir("run_basic");
    const RunConfig cfg = parse_config_json(tiny_run_doc(dir));
    const RunManifest manifest = run(cfg);

    CHECK(fs::exists(dir / "manifest.json"));
    CHECK(fs::exists(dir / "timeseries.csv"));
    CHECK(fs::exists(dir / "snapshot_initial.csv"));
    CHECK(fs::exists(dir / "snapshot_final.csv"));
    CHECK(fs::exists(dir / "probe_1.csv"));

    const json doc = json::parse(slurp(dir / "manifest.json"));
    CHECK(doc.contains("config"));
    CHECK(doc.contains("files"));
    for (const auto& entry : doc["files"]) {
        const fs::path f = dir / entry["path"].get<std::string>();
        CHECK(fs::exists(f));
        CHECK(fs::file_size(f) == entry["bytes"].get<std::uintmax_t>());
        char hex[24];
        std::snprintf(hex, sizeof hex, "%016llx",
                      static_cast<unsigned long long>(fnv1a64_file(f)));
        CHECK(entry["fnv1a64"].get<std::string>() == hex);
    }
    CHECK(manifest.files.size() == doc["files"].size());
}

TEST_CASE("manifest config re-runs byte-identically") {
    const fs::path dir_a = fresh_dir("rerun_a");
    const fs::path dir_b = fresh_dir("rerun_b");
    const RunConfig cfg = parse_config_json(tiny_run_doc(dir_a));
    run(cfg);

    // feed the manifest's resolved config back in, redirected elsewhere
    json resolved = json::parse(slurp(dir_a / "manifest.json"))["config"];
    resolved["output_dir"] = dir_b.string();
    run(parse_config_json(resolved));

    for (const char* name : {"timeseries.csv", "snapshot_initial.csv", "snapshot_final.csv",
                             "probe_1.csv"}) {
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
    }
}

TEST_CASE("run_analytic agrees with run() on the trajectory of the exact solution") {
    const fs::path dir_n = fresh_dir("numeric");
    const fs::path dir_a = fresh_dir("analytic");
    json doc = tiny_run_doc(dir_n);
    const RunManifest numeric = run(parse_config_json(doc));
    doc["output_dir"] = dir_a.string();
    const RunManifest analytic = run_analytic(parse_config_json(doc));
    (void)numeric;
    (void)analytic;

    // compare x_cm columns of the two time series rows
    auto read_col = [](const fs::path& p, std::size_t col) {
        std::ifstream in(p);
        std::string line;
        std::getline(in, line);  // header
        std::vector<double> vals;
        while (std::getline(in, line)) {
            std::stringstream ss(line);
            std::string cell;
            for (std::size_t c = 0; c <= col; ++c) std::getline(ss, cell, ',');
            vals.push_back(std::stod(cell));
        }
        return vals;
    };
    const auto x_num = read_col(dir_n / "timeseries.csv", 2);
    const auto x_ana = read_col(dir_a / "timeseries.csv", 2);
    REQUIRE(x_num.size() == x_ana.size());
    for (std::size_t i = 0; i < x_num.size(); ++i) {
        CHECK(std::abs(x_num[i] - x_ana[i]) < 1e-6);
    }
}

TEST_CASE("run_stability writes a report and honours --enforce") {
    const fs::path dir = fresh_dir("stab");
    json doc = tiny_run_doc(dir);
    doc["noise"] = {{"fraction", 0.01}, {"n_realizations", 2}};
    const RunConfig cfg = parse_config_json(doc);
    const RunManifest manifest = run_stability(cfg);
    CHECK(fs::exists(dir / "stability.csv"));
    CHECK(fs::exists(dir / "stability_report.json"));
    CHECK(fs::exists(dir / "timeseries_clean.csv"));
    CHECK(fs::exists(dir / "timeseries_noisy.csv"));
    const json report = json::parse(slurp(dir / "stability_report.json"));
    CHECK(report["pass_threshold"].get<double>() == 0.10);
    (void)manifest;

    // an absurdly tight threshold fails enforcement
    const fs::path dir2 = fresh_dir("stab_enforce");
    doc["output_dir"] = dir2.string();
    CHECK_THROWS_AS(run_stability(parse_config_json(doc), true, 1e-12),
                    stability_threshold_error);
}

TEST_CASE("sweep expands the Cartesian product into isolated directories") {
    const fs::path dir = fresh_dir("sweep");
    json doc = tiny_run_doc(dir / "unused");
    doc.erase("output_dir");
    doc["sweep"] = {{"potential.a", {1.0, 2.0}}, {"droplet.N", {1.0, 2.0}}};
    run_sweep(doc, dir);

    CHECK(fs::exists(dir / "manifest.json"));
    int combos = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_directory()) {
            ++combos;
            CHECK(fs::exists(entry.path() / "manifest.json"));
            CHECK(fs::exists(entry.path() / "timeseries.csv"));
        }
    }
    CHECK(combos == 4);
}

TEST_CASE("preset registry") {
    CHECK(is_preset("fig1"));
    CHECK(is_preset("fig10"));
    CHECK_FALSE(is_preset("fig11"));
    CHECK(preset_names().size() == 10);
    CHECK_THROWS_AS(run_preset("nope", fresh_dir("preset_bad"), 1), config_error);
}

TEST_CASE("fig1 preset emits one density per trap strength, reproducibly") {
    const fs::path dir_a = fresh_dir("fig1_a");
    const fs::path dir_b = fresh_dir("fig1_b");
    run_preset("fig1", dir_a, 1);
    run_preset("fig1", dir_b, 1);
    for (const char* name : {"fig1_density_a0.csv", "fig1_density_a9.8.csv",
                             "fig1_density_a0.98.csv", "fig1_density_a0.098.csv"}) {
        CHECK(fs::exists(dir_a / name));
        CHECK(slurp(dir_a / name) == slurp(dir_b / name));
    }
    CHECK(fs::exists(dir_a / "manifest.json"));
}
