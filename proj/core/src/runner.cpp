#include "qdf/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "qdf/csv.hpp"
#include "qdf/diagnostics.hpp"
#include "qdf/errors.hpp"
#include "qdf/parallel.hpp"
#include "qdf/version.hpp"
#include "qdf/wigner.hpp"

namespace qdf {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class WallTimer {
public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

fs::path prepare_out_dir(const RunConfig& cfg) {
    fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    return dir;
}

std::string convention_name(KineticConvention c) {
    return c == KineticConvention::HalfLaplacian ? "half" : "full";
}

/// Observation times of an evolution with the given cadence (initial state,
/// every record_every steps, final step).
std::vector<double> record_times(const RunConfig& cfg) {
    std::vector<double> times{0.0};
    for (std::size_t i = cfg.record_every; i < cfg.n_steps; i += cfg.record_every) {
        times.push_back(static_cast<double>(i) * cfg.dt);
    }
    if (cfg.n_steps > 0) times.push_back(static_cast<double>(cfg.n_steps) * cfg.dt);
    return times;
}

EntropyOptions entropy_options(const RunConfig& cfg) {
    EntropyOptions opt;
    opt.normalized = cfg.entropy_normalized;
    if (cfg.entropy_window_lo) opt.window_lo = *cfg.entropy_window_lo;
    if (cfg.entropy_window_hi) opt.window_hi = *cfg.entropy_window_hi;
    return opt;
}

RunManifest finish_manifest(const RunConfig& cfg, const fs::path& dir,
                            std::vector<fs::path> files, const WallTimer& timer,
                            json notes = {}) {
    RunManifest manifest;
    manifest.config = cfg.to_json();
    manifest.convention = convention_name(cfg.convention);
    manifest.version = kVersion;
    manifest.duration_seconds = timer.seconds();
    manifest.notes = std::move(notes);
    manifest.files = std::move(files);
    write_manifest(dir / "manifest.json", manifest);
    return manifest;
}

std::string probe_file_name(double x_probe) {
    return "probe_" + format_double(x_probe) + ".csv";
}

}  // namespace

RunManifest run(const RunConfig& cfg) {
    WallTimer timer;
    const fs::path dir = prepare_out_dir(cfg);
    auto grid = cfg.make_spatial_grid();
    const DropletState state = cfg.resolve_state();
    const ComplexField psi0 = full_wavefunction(state, grid, 0.0);
    const EvolutionConfig evo = cfg.evolution_config();
    if (!evo.kinetic_phase_ok(*grid)) {
        std::fprintf(stderr,
                     "warning: kinetic phase per step exceeds pi at k_max; dt is large for this grid\n");
    }
    const EntropyOptions ent_opt = entropy_options(cfg);

    std::vector<double> entropies;
    std::vector<std::vector<double>> probe_series(cfg.probes.size());
    std::vector<double> probe_times;
    std::optional<ComplexField> last_seen;

    EvolveOptions opts;
    opts.store_snapshots = cfg.store_snapshots;
    opts.on_record = [&](double t, const ComplexField& psi) {
        entropies.push_back(shannon_entropy(psi, ent_opt));
        probe_times.push_back(t);
        for (std::size_t p = 0; p < cfg.probes.size(); ++p) {
            probe_series[p].push_back(density_at(psi, cfg.probes[p]));
        }
        if (t == 0.0) write_snapshot_csv(dir / "snapshot_initial.csv", psi);
        last_seen = psi;
    };

    const EvolutionRecord rec = evolve(psi0, state.potential, evo, opts);

    std::vector<fs::path> files;
    write_time_series_csv(dir / "timeseries.csv", rec, entropies);
    files.emplace_back("timeseries.csv");
    files.emplace_back("snapshot_initial.csv");
    if (last_seen) {
        write_snapshot_csv(dir / "snapshot_final.csv", *last_seen);
        files.emplace_back("snapshot_final.csv");
    }

    for (std::size_t p = 0; p < cfg.probes.size(); ++p) {
        const auto name = probe_file_name(cfg.probes[p]);
        write_probe_csv(dir / name, probe_times, probe_series[p]);
        files.emplace_back(name);
    }

    return finish_manifest(cfg, dir, std::move(files), timer);
}

RunManifest run_analytic(const RunConfig& cfg) {
    WallTimer timer;
    const fs::path dir = prepare_out_dir(cfg);
    auto grid = cfg.make_spatial_grid();
    const DropletState state = cfg.resolve_state();
    const EntropyOptions ent_opt = entropy_options(cfg);
    const std::vector<double> times = record_times(cfg);

    EvolutionRecord rec;
    std::vector<double> entropies;
    std::vector<std::vector<double>> probe_series(cfg.probes.size());
    for (double t : times) {
        const ComplexField psi = full_wavefunction(state, grid, t);
        rec.times.push_back(t);
        rec.norms.push_back(norm(psi));
        rec.centers_of_mass.push_back(center_of_mass(psi));
        rec.peak_positions.push_back(peak_position(psi));
        entropies.push_back(shannon_entropy(psi, ent_opt));
        for (std::size_t p = 0; p < cfg.probes.size(); ++p) {
            probe_series[p].push_back(density_at(psi, cfg.probes[p]));
        }
        if (t == times.front()) write_snapshot_csv(dir / "snapshot_initial.csv", psi);
        if (t == times.back()) write_snapshot_csv(dir / "snapshot_final.csv", psi);
    }

    std::vector<fs::path> files;
    write_time_series_csv(dir / "timeseries.csv", rec, entropies);
    files.emplace_back("timeseries.csv");
    files.emplace_back("snapshot_initial.csv");
    files.emplace_back("snapshot_final.csv");
    for (std::size_t p = 0; p < cfg.probes.size(); ++p) {
        const auto name = probe_file_name(cfg.probes[p]);
        write_probe_csv(dir / name, times, probe_series[p]);
        files.emplace_back(name);
    }

    return finish_manifest(cfg, dir, std::move(files), timer);
}

RunManifest run_wigner(const RunConfig& cfg) {
    WallTimer timer;
    const fs::path dir = prepare_out_dir(cfg);
    auto grid = cfg.make_spatial_grid();
    const DropletState state = cfg.resolve_state();
    const ComplexField psi = full_wavefunction(state, grid, cfg.wigner_time);

    const double kmax = grid->k_max();
    const double p_min = cfg.wigner_p_min.value_or(-0.5 * kmax);
    const double p_max = cfg.wigner_p_max.value_or(0.5 * kmax);
    const WignerMap map = wigner(psi, p_min, p_max, cfg.wigner_n_p);

    write_wigner_csv(dir / "wigner.csv", map);
    json notes;
    notes["wigner_time"] = cfg.wigner_time;
    notes["wigner_mass"] = map.mass;
    notes["wigner_imag_residue"] = map.imag_residue;
    return finish_manifest(cfg, dir, {"wigner.csv"}, timer, notes);
}

RunManifest run_entropy(const RunConfig& cfg) {
    WallTimer timer;
    const fs::path dir = prepare_out_dir(cfg);
    auto grid = cfg.make_spatial_grid();
    const DropletState state = cfg.resolve_state();
    const EntropyOptions ent_opt = entropy_options(cfg);

    EntropySeries series;
    series.times = record_times(cfg);
    for (double t : series.times) {
        series.entropy.push_back(shannon_entropy(full_wavefunction(state, grid, t), ent_opt));
    }
    write_entropy_csv(dir / "entropy.csv", series);

    json notes;
    notes["entropy_variant"] = cfg.entropy_normalized ? "normalized" : "raw";
    if (cfg.entropy_window_lo) notes["entropy_window_lo"] = *cfg.entropy_window_lo;
    if (cfg.entropy_window_hi) notes["entropy_window_hi"] = *cfg.entropy_window_hi;
    return finish_manifest(cfg, dir, {"entropy.csv"}, timer, notes);
}

RunManifest run_stability(const RunConfig& cfg, bool enforce, std::optional<double> threshold) {
    WallTimer timer;
    const fs::path dir = prepare_out_dir(cfg);
    auto grid = cfg.make_spatial_grid();
    const DropletState state = cfg.resolve_state();
    const EvolutionConfig evo = cfg.evolution_config();
    const NoiseSpec noise = cfg.noise_spec();
    const double pass_threshold = threshold.value_or(
        cfg.potential.variant == TrapVariant::ModulatedLinear ? 0.12 : 0.10);

    const StabilityReport report = stability_run(state, cfg.potential, evo, noise, grid,
                                                 pass_threshold);

    std::vector<fs::path> files;
    write_stability_csv(dir / "stability.csv", *grid, report.clean_final_density,
                        report.mean_noisy_final_density, report.per_x_sd);
    files.emplace_back("stability.csv");

    // reference evolutions for plotting: the clean trajectory and the first
    // noisy realization
    const ComplexField psi0 = full_wavefunction(state, grid, 0.0);
    for (int noisy = 0; noisy < 2; ++noisy) {
        const ComplexField start = noisy ? add_noise(psi0, noise, 0) : psi0;
        std::vector<double> entropies;
        EvolveOptions opts;
        opts.on_record = [&](double, const ComplexField& psi) {
            entropies.push_back(shannon_entropy(psi));
        };
        const EvolutionRecord rec = evolve(start, state.potential, evo, opts);
        const char* name = noisy ? "timeseries_noisy.csv" : "timeseries_clean.csv";
        write_time_series_csv(dir / name, rec, entropies);
        files.emplace_back(name);
    }

    json report_doc;
    report_doc["max_relative_deviation"] = report.max_relative_deviation;
    report_doc["pass_threshold"] = report.pass_threshold;
    report_doc["passed"] = report.passed;
    report_doc["n_realizations"] = noise.n_realizations;
    report_doc["noise_fraction"] = noise.fraction;
    report_doc["deviation_definition"] =
        "max over x of (|mean noisy density - clean density| + sd) / max clean density, at final time";
    {
        std::ofstream out(dir / "stability_report.json", std::ios::binary);
        out << report_doc.dump(2) << '\n';
    }
    files.emplace_back("stability_report.json");

    const RunManifest manifest =
        finish_manifest(cfg, dir, std::move(files), timer, report_doc);
    if (enforce && !report.passed) {
        throw stability_threshold_error(
            "stability: max relative deviation " + std::to_string(report.max_relative_deviation) +
                " exceeds threshold " + std::to_string(report.pass_threshold),
            report.max_relative_deviation);
    }
    return manifest;
}

RunManifest run_sweep(json doc, const fs::path& out_dir) {
    WallTimer timer;
    json sweep_obj = json::object();
    if (doc.contains("sweep")) {
        sweep_obj = doc.at("sweep");
        doc.erase("sweep");
        if (!sweep_obj.is_object()) throw config_error("sweep: expected an object of key -> array");
    }

    // deterministic order: nlohmann objects iterate alphabetically
    std::vector<std::string> keys;
    std::vector<std::vector<json>> values;
    for (const auto& item : sweep_obj.items()) {
        if (!item.value().is_array() || item.value().empty()) {
            throw config_error("sweep: key '" + item.key() + "' must map to a non-empty array");
        }
        keys.push_back(item.key());
        values.emplace_back(item.value().begin(), item.value().end());
    }

    std::size_t combos = 1;
    for (const auto& v : values) combos *= v.size();

    fs::create_directories(out_dir);
    std::vector<json> combo_manifests(combos);

    parallel_for(combos, [&](std::size_t c) {
        json combo_doc = doc;
        std::size_t idx = c;
        std::string label = "combo_" + std::to_string(c);
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const json& val = values[k][idx % values[k].size()];
            idx /= values[k].size();
            json* node = &combo_doc;
            std::size_t start = 0;
            const std::string& path = keys[k];
            for (;;) {
                const std::size_t dot = path.find('.', start);
                const std::string part = path.substr(start, dot - start);
                if (dot == std::string::npos) {
                    (*node)[part] = val;
                    break;
                }
                if (!node->contains(part) || !(*node)[part].is_object()) {
                    (*node)[part] = json::object();
                }
                node = &(*node)[part];
                start = dot + 1;
            }
        }
        combo_doc["output_dir"] = (out_dir / label).string();
        RunConfig cfg = parse_config_json(combo_doc);
        const RunManifest m = run(cfg);
        json entry;
        entry["dir"] = label;
        entry["config"] = m.config;
        combo_manifests[c] = entry;
    });

    RunManifest manifest;
    manifest.config = doc;
    manifest.convention = "per-combo";
    manifest.version = kVersion;
    manifest.duration_seconds = timer.seconds();
    json notes;
    notes["combos"] = combo_manifests;
    manifest.notes = notes;
    write_manifest(out_dir / "manifest.json", manifest);
    return manifest;
}

}  // namespace qdf
