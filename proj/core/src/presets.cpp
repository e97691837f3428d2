#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "qdf/csv.hpp"
#include "qdf/diagnostics.hpp"
#include "qdf/errors.hpp"
#include "qdf/runner.hpp"
#include "qdf/stability.hpp"
#include "qdf/version.hpp"
#include "qdf/wigner.hpp"

namespace qdf {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kReferenceDx = 0.0488;

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<double> linspace(double t0, double t1, std::size_t n) {
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) {
        ts[i] = t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return ts;
}

DropletParams figure_droplet(double G2 = 0.9999) {
    // figure caption parameters (mu = mu0, G1 = -1) resolved into the canonical convention
    return DropletParams::from_mu_ratio(1.0, 1.0, G2, KineticConvention::HalfLaplacian);
}

struct AnalyticSeries {
    EvolutionRecord rec;
    std::vector<double> entropies;
};

AnalyticSeries sample_series(const DropletState& state, std::shared_ptr<const SpatialGrid> grid,
                             const std::vector<double>& times, const EntropyOptions& ent = {}) {
    AnalyticSeries out;
    for (double t : times) {
        const ComplexField psi = full_wavefunction(state, grid, t);
        out.rec.times.push_back(t);
        out.rec.norms.push_back(norm(psi));
        out.rec.centers_of_mass.push_back(center_of_mass(psi));
        out.rec.peak_positions.push_back(peak_position(psi));
        out.entropies.push_back(shannon_entropy(psi, ent));
    }
    return out;
}

std::vector<double> sample_probe(const DropletState& state, std::shared_ptr<const SpatialGrid> grid,
                                 const std::vector<double>& times, double x_probe) {
    std::vector<double> density;
    density.reserve(times.size());
    for (double t : times) {
        density.push_back(density_at(full_wavefunction(state, grid, t), x_probe));
    }
    return density;
}

EntropySeries sample_entropy(const DropletState& state, std::shared_ptr<const SpatialGrid> grid,
                             const std::vector<double>& times, const EntropyOptions& ent) {
    EntropySeries series;
    series.times = times;
    for (double t : times) {
        series.entropy.push_back(shannon_entropy(full_wavefunction(state, grid, t), ent));
    }
    return series;
}

struct PresetContext {
    fs::path dir;
    std::vector<fs::path> files;
    json notes;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void add(const std::string& name) { files.emplace_back(name); }
};

RunManifest finish(PresetContext& ctx, const std::string& preset, std::uint64_t seed) {
    RunManifest manifest;
    json cfg;
    cfg["preset"] = preset;
    cfg["seed"] = seed;
    manifest.config = cfg;
    manifest.convention = "half";
    manifest.version = kVersion;
    manifest.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count();
    manifest.notes = ctx.notes;
    manifest.files = ctx.files;
    write_manifest(ctx.dir / "manifest.json", manifest);
    return manifest;
}

PotentialSpec trap_for(double a) {
    return a == 0.0 ? PotentialSpec::free_space() : PotentialSpec::constant_linear(a);
}

// ---------------------------------------------------------------- fig 1-3

RunManifest preset_fig1(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    for (double a : {0.0, 9.8, 0.98, 0.098}) {
        const DropletState state = DropletState::make(figure_droplet(), trap_for(a));
        const std::string name = "fig1_density_a" + short_num(a) + ".csv";
        write_snapshot_csv(ctx.dir / name, full_wavefunction(state, grid, 1.0));
        ctx.add(name);
    }
    ctx.notes["time"] = 1.0;
    return finish(ctx, "fig1", seed);
}

RunManifest preset_fig2(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    for (double a : {0.0, 0.098, 0.54, 0.98, 4.9, 9.8}) {
        const DropletState state = DropletState::make(figure_droplet(), trap_for(a));
        const double T = a > 0.0 ? std::min(10.0, std::sqrt(90.0 / a)) : 10.0;
        const AnalyticSeries s = sample_series(state, grid, linspace(0.0, T, 201));
        const std::string name = "fig2_series_a" + short_num(a) + ".csv";
        write_time_series_csv(ctx.dir / name, s.rec, s.entropies);
        ctx.add(name);
    }
    return finish(ctx, "fig2", seed);
}

RunManifest preset_fig3(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    const PotentialSpec trap = PotentialSpec::constant_linear(0.098);
    for (double G2 : {0.9, 0.999, 0.9999, 0.999999}) {
        const DropletState state = DropletState::make(figure_droplet(G2), trap);
        const AnalyticSeries s = sample_series(state, grid, linspace(0.0, 10.0, 201));
        const std::string name = "fig3_series_G2_" + short_num(G2) + ".csv";
        write_time_series_csv(ctx.dir / name, s.rec, s.entropies);
        ctx.add(name);
    }
    return finish(ctx, "fig3", seed);
}

// ---------------------------------------------------------------- fig 4-6

DropletParams counted_droplet(double N, double G2 = 0.9999) {
    return DropletParams::from_norm(N, 1.0, G2, KineticConvention::HalfLaplacian);
}

RunManifest preset_fig4(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    // (a) probe at x=20 for N = 1, 3, 5 under a = 0.98
    for (double N : {1.0, 3.0, 5.0}) {
        const DropletState state =
            DropletState::make(counted_droplet(N), PotentialSpec::constant_linear(0.98));
        const auto times = linspace(0.0, 10.0, 501);
        const std::string name = "fig4a_probe_N" + short_num(N) + ".csv";
        write_probe_csv(ctx.dir / name, times, sample_probe(state, grid, times, 20.0));
        ctx.add(name);
        // (b) spatial profile at t = 7
        const std::string snap = "fig4b_density_N" + short_num(N) + ".csv";
        write_snapshot_csv(ctx.dir / snap, full_wavefunction(state, grid, 7.0));
        ctx.add(snap);
    }
    // (c) fixed N = 5, varying a
    for (double a : {9.8, 0.98, 0.098}) {
        const DropletState state =
            DropletState::make(counted_droplet(5.0), PotentialSpec::constant_linear(a));
        const double T = std::min(25.0, std::sqrt(80.0 / a));
        const auto times = linspace(0.0, T, 501);
        const std::string name = "fig4c_probe_a" + short_num(a) + ".csv";
        write_probe_csv(ctx.dir / name, times, sample_probe(state, grid, times, 20.0));
        ctx.add(name);
    }
    ctx.notes["probe"] = 20.0;
    return finish(ctx, "fig4", seed);
}

RunManifest preset_fig5(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    const auto times = linspace(0.0, 2.5, 251);
    for (double N : {1.0, 3.0, 5.0}) {
        for (double alpha : {0.1, 0.2, 0.3}) {
            const DropletState state = DropletState::make(
                counted_droplet(N), PotentialSpec::modulated_linear(9.8, alpha, 0.5));
            const std::string name =
                "fig5a_probe_alpha" + short_num(alpha) + "_N" + short_num(N) + ".csv";
            write_probe_csv(ctx.dir / name, times, sample_probe(state, grid, times, 20.0));
            ctx.add(name);
        }
        for (double omega : {0.5, 0.55, 0.6}) {
            const DropletState state = DropletState::make(
                counted_droplet(N), PotentialSpec::modulated_linear(9.8, 0.3, omega));
            const std::string name =
                "fig5b_probe_omega" + short_num(omega) + "_N" + short_num(N) + ".csv";
            write_probe_csv(ctx.dir / name, times, sample_probe(state, grid, times, 20.0));
            ctx.add(name);
        }
    }
    ctx.notes["probe"] = 20.0;
    return finish(ctx, "fig5", seed);
}

RunManifest preset_fig6(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(8192, kReferenceDx));
    // (a) probe at x = 50 under a = 0.98, omega = 1
    const auto times_a = linspace(0.0, 12.0, 601);
    for (double alpha : {0.0, 20.0, -20.0}) {
        const DropletState state = DropletState::make(
            figure_droplet(), PotentialSpec::modulated_linear(0.98, alpha, 1.0));
        const std::string name = "fig6a_probe_alpha" + short_num(alpha) + ".csv";
        write_probe_csv(ctx.dir / name, times_a, sample_probe(state, grid, times_a, 50.0));
        ctx.add(name);
    }
    // (b), (c) space-time evolution under a = 0.098
    const char* panel = "b";
    for (double alpha : {20.0, -20.0}) {
        const DropletState state = DropletState::make(
            figure_droplet(), PotentialSpec::modulated_linear(0.098, alpha, 1.0));
        const AnalyticSeries s = sample_series(state, grid, linspace(0.0, 25.0, 501));
        const std::string series_name = std::string("fig6") + panel + "_series_alpha" +
                                        short_num(alpha) + ".csv";
        write_time_series_csv(ctx.dir / series_name, s.rec, s.entropies);
        ctx.add(series_name);
        for (double t : {0.0, 6.25, 12.5, 18.75, 25.0}) {
            const std::string snap = std::string("fig6") + panel + "_density_t" + short_num(t) +
                                     "_alpha" + short_num(alpha) + ".csv";
            write_snapshot_csv(ctx.dir / snap, full_wavefunction(state, grid, t));
            ctx.add(snap);
        }
        panel = "c";
    }
    ctx.notes["probe"] = 50.0;
    return finish(ctx, "fig6", seed);
}

// ---------------------------------------------------------------- fig 7-10

RunManifest wigner_preset(PresetContext& ctx, const std::string& preset, const char* tag,
                          const std::vector<std::pair<std::string, PotentialSpec>>& traps,
                          std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    const double t = 1.0;
    json maps = json::array();
    for (const auto& [label, trap] : traps) {
        const DropletState state = DropletState::make(figure_droplet(), trap);
        const ComplexField psi = full_wavefunction(state, grid, t);
        const double p_center = -gamma_dot(trap, t);
        const WignerMap map = wigner(psi, p_center - 18.0, p_center + 18.0, 256);
        const std::string name = preset + "_wigner_" + tag + label + ".csv";
        write_wigner_csv(ctx.dir / name, map);
        ctx.add(name);
        maps.push_back({{"file", name},
                        {"p_center", p_center},
                        {"mass", map.mass},
                        {"imag_residue", map.imag_residue}});
    }
    ctx.notes["time"] = t;
    ctx.notes["maps"] = maps;
    return finish(ctx, preset, seed);
}

RunManifest preset_fig7(PresetContext& ctx, std::uint64_t seed) {
    std::vector<std::pair<std::string, PotentialSpec>> traps;
    for (double alpha : {0.0, 0.1, 0.2, 0.3}) {
        traps.emplace_back(short_num(alpha), PotentialSpec::modulated_linear(9.8, alpha, 0.5));
    }
    return wigner_preset(ctx, "fig7", "alpha", traps, seed);
}

RunManifest preset_fig8(PresetContext& ctx, std::uint64_t seed) {
    std::vector<std::pair<std::string, PotentialSpec>> traps;
    for (double omega : {1.0, 5.0, 10.0}) {
        traps.emplace_back(short_num(omega), PotentialSpec::modulated_linear(9.8, 0.3, omega));
    }
    return wigner_preset(ctx, "fig8", "omega", traps, seed);
}

RunManifest preset_fig9(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    EntropyOptions ent;
    ent.normalized = true;
    ent.window_lo = 20.0;  // probe-anchored window: everything past x = 20

    // (a) constant traps; spans sized so every series reaches its plateau
    const std::vector<std::pair<double, double>> panel_a{{9.8, 3.0}, {0.98, 9.0}, {0.098, 28.0}};
    for (const auto& [a, T] : panel_a) {
        const DropletState state = DropletState::make(figure_droplet(), trap_for(a));
        const auto times = linspace(0.0, T, static_cast<std::size_t>(T / 0.02) + 1);
        const std::string name = "fig9a_entropy_a" + short_num(a) + ".csv";
        write_entropy_csv(ctx.dir / name, sample_entropy(state, grid, times, ent));
        ctx.add(name);
    }
    const auto times = linspace(0.0, 2.8, 141);
    // (b) modulated vs unmodulated at a = 9.8
    for (double alpha : {0.0, 0.3}) {
        const DropletState state = DropletState::make(
            figure_droplet(), PotentialSpec::modulated_linear(9.8, alpha, 0.5));
        const std::string name = "fig9b_entropy_alpha" + short_num(alpha) + ".csv";
        write_entropy_csv(ctx.dir / name, sample_entropy(state, grid, times, ent));
        ctx.add(name);
    }
    // (c) modulation amplitude scan
    for (double alpha : {0.1, 0.2, 0.3}) {
        const DropletState state = DropletState::make(
            figure_droplet(), PotentialSpec::modulated_linear(9.8, alpha, 0.5));
        const std::string name = "fig9c_entropy_alpha" + short_num(alpha) + ".csv";
        write_entropy_csv(ctx.dir / name, sample_entropy(state, grid, times, ent));
        ctx.add(name);
    }
    // (d) drive frequency scan
    for (double omega : {0.5, 0.55, 0.6}) {
        const DropletState state = DropletState::make(
            figure_droplet(), PotentialSpec::modulated_linear(9.8, 0.3, omega));
        const std::string name = "fig9d_entropy_omega" + short_num(omega) + ".csv";
        write_entropy_csv(ctx.dir / name, sample_entropy(state, grid, times, ent));
        ctx.add(name);
    }
    ctx.notes["entropy_variant"] = "normalized";
    ctx.notes["entropy_window_lo"] = 20.0;
    return finish(ctx, "fig9", seed);
}

RunManifest preset_fig10(PresetContext& ctx, std::uint64_t seed) {
    auto grid = std::make_shared<const SpatialGrid>(make_centered_grid(4096, kReferenceDx));
    const DropletParams params = counted_droplet(1.0);

    EvolutionConfig evo;
    evo.dt = 1e-4;
    evo.n_steps = 10000;
    evo.record_every = 100;
    const EgpeCouplings g = egpe_couplings(params);
    evo.g1 = g.g1;
    evo.g2 = g.g2;

    NoiseSpec noise;
    noise.fraction = 0.01;
    noise.seed = seed;
    noise.n_realizations = 8;

    struct Case {
        const char* label;
        PotentialSpec trap;
        double threshold;
    };
    const Case cases[] = {
        {"constant", PotentialSpec::constant_linear(9.8), 0.10},
        {"modulated", PotentialSpec::modulated_linear(9.8, 0.3, 0.5), 0.12},
    };

    json reports = json::object();
    for (const Case& c : cases) {
        const DropletState state = DropletState::make(params, c.trap);
        const StabilityReport report =
            stability_run(state, c.trap, evo, noise, grid, c.threshold);

        const std::string prefix = std::string("fig10_") + c.label;
        write_stability_csv(ctx.dir / (prefix + "_stability.csv"), *grid,
                            report.clean_final_density, report.mean_noisy_final_density,
                            report.per_x_sd);
        ctx.add(prefix + "_stability.csv");

        const ComplexField psi0 = full_wavefunction(state, grid, 0.0);
        for (int noisy = 0; noisy < 2; ++noisy) {
            const ComplexField start = noisy ? add_noise(psi0, noise, 0) : psi0;
            std::vector<double> entropies;
            EvolveOptions opts;
            opts.on_record = [&](double, const ComplexField& psi) {
                entropies.push_back(shannon_entropy(psi));
            };
            const EvolutionRecord rec = evolve(start, c.trap, evo, opts);
            const std::string name = prefix + (noisy ? "_timeseries_noisy.csv"
                                                     : "_timeseries_clean.csv");
            write_time_series_csv(ctx.dir / name, rec, entropies);
            ctx.add(name);
        }

        json rep;
        rep["max_relative_deviation"] = report.max_relative_deviation;
        rep["pass_threshold"] = report.pass_threshold;
        rep["passed"] = report.passed;
        reports[c.label] = rep;
        {
            std::ofstream out(ctx.dir / (prefix + "_report.json"), std::ios::binary);
            out << rep.dump(2) << '\n';
        }
        ctx.add(prefix + "_report.json");
    }
    ctx.notes["reports"] = reports;
    ctx.notes["noise"] = {{"fraction", noise.fraction},
                          {"n_realizations", noise.n_realizations},
                          {"scale", "amplitude"},
                          {"distribution", "uniform"}};
    return finish(ctx, "fig10", seed);
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig10"};
}

bool is_preset(const std::string& name) {
    for (const auto& p : preset_names()) {
        if (p == name) return true;
    }
    return false;
}

RunManifest run_preset(const std::string& name, const fs::path& out_dir, std::uint64_t seed) {
    if (!is_preset(name)) throw config_error("unknown preset '" + name + "'");
    PresetContext ctx;
    ctx.dir = out_dir;
    fs::create_directories(ctx.dir);

    if (name == "fig1") return preset_fig1(ctx, seed);
    if (name == "fig2") return preset_fig2(ctx, seed);
    if (name == "fig3") return preset_fig3(ctx, seed);
    if (name == "fig4") return preset_fig4(ctx, seed);
    if (name == "fig5") return preset_fig5(ctx, seed);
    if (name == "fig6") return preset_fig6(ctx, seed);
    if (name == "fig7") return preset_fig7(ctx, seed);
    if (name == "fig8") return preset_fig8(ctx, seed);
    if (name == "fig9") return preset_fig9(ctx, seed);
    return preset_fig10(ctx, seed);
}

}  // namespace qdf
