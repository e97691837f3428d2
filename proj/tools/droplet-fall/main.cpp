// droplet-fall: experiment runner for 1D self-bound droplets in linear traps.
//
// Subcommands: analytic, evolve, wigner, entropy, stability, preset <figN>,
// sweep. Configuration is a single JSON document plus dotted-key overrides
// (--set potential.a=9.8). Exit codes: 0 success, 2 config error,
// 3 numerical blow-up, 4 domain-exit guard, 5 stability threshold failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdf/config.hpp"
#include "qdf/errors.hpp"
#include "qdf/runner.hpp"
#include "qdf/version.hpp"

namespace {

struct CommonArgs {
    std::string config_file;
    std::vector<std::string> overrides;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_file, "JSON configuration file");
    cmd->add_option("--set", args.overrides, "dotted-key override, e.g. potential.a=9.8");
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "RNG seed")->each([&](const std::string&) {
        args.seed_given = true;
    });
}

nlohmann::json load_document(const CommonArgs& args) {
    nlohmann::json doc = nlohmann::json::object();
    if (!args.config_file.empty()) {
        std::ifstream in(args.config_file);
        if (!in) throw qdf::config_error("cannot open config file " + args.config_file);
        std::stringstream buf;
        buf << in.rdbuf();
        const std::string text = buf.str();
        if (!text.empty()) {
            try {
                doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                throw qdf::config_error(std::string("malformed config JSON: ") + e.what());
            }
        }
    }
    for (const std::string& kv : args.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw qdf::config_error("--set expects key=value, got '" + kv + "'");
        }
        qdf::apply_override(doc, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!args.out_dir.empty()) doc["output_dir"] = args.out_dir;
    if (args.seed_given) doc["seed"] = args.seed;
    return doc;
}

qdf::RunConfig load_config(const CommonArgs& args) {
    return qdf::parse_config_json(load_document(args));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1D quantum droplet dynamics in constant and modulated linear traps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qdf::kVersion);

    CommonArgs analytic_args, evolve_args, wigner_args, entropy_args, stability_args, sweep_args,
        preset_args;

    CLI::App* cmd_analytic =
        app.add_subcommand("analytic", "closed-form trajectory, snapshots and probe series");
    add_common(cmd_analytic, analytic_args);

    CLI::App* cmd_evolve = app.add_subcommand("evolve", "split-step evolution with observers");
    add_common(cmd_evolve, evolve_args);

    CLI::App* cmd_wigner = app.add_subcommand("wigner", "phase-space map of the analytic state");
    add_common(cmd_wigner, wigner_args);

    CLI::App* cmd_entropy = app.add_subcommand("entropy", "Shannon entropy series");
    add_common(cmd_entropy, entropy_args);

    CLI::App* cmd_stability = app.add_subcommand("stability", "noise-robustness protocol");
    add_common(cmd_stability, stability_args);
    bool enforce = false;
    double threshold = -1.0;
    cmd_stability->add_flag("--enforce", enforce, "exit 5 when the deviation threshold fails");
    cmd_stability->add_option("--threshold", threshold,
                              "pass threshold (default 0.10 constant / 0.12 modulated)");

    CLI::App* cmd_preset = app.add_subcommand("preset", "run a figure preset (fig1..fig10)");
    std::string preset_name;
    cmd_preset->add_option("name", preset_name, "preset name")->required();
    add_common(cmd_preset, preset_args);

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Cartesian sweep over the config's \"sweep\" arrays");
    add_common(cmd_sweep, sweep_args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_analytic->parsed()) {
            qdf::run_analytic(load_config(analytic_args));
        } else if (cmd_evolve->parsed()) {
            qdf::run(load_config(evolve_args));
        } else if (cmd_wigner->parsed()) {
            qdf::run_wigner(load_config(wigner_args));
        } else if (cmd_entropy->parsed()) {
            qdf::run_entropy(load_config(entropy_args));
        } else if (cmd_stability->parsed()) {
            std::optional<double> thr;
            if (threshold >= 0.0) thr = threshold;
            qdf::run_stability(load_config(stability_args), enforce, thr);
        } else if (cmd_preset->parsed()) {
            if (!qdf::is_preset(preset_name)) {
                throw qdf::config_error("unknown preset '" + preset_name + "'");
            }
            const std::string out =
                preset_args.out_dir.empty() ? "out/" + preset_name : preset_args.out_dir;
            const std::uint64_t seed = preset_args.seed_given ? preset_args.seed : 1;
            qdf::run_preset(preset_name, out, seed);
        } else if (cmd_sweep->parsed()) {
            nlohmann::json doc = load_document(sweep_args);
            std::string out = "out/sweep";
            if (doc.contains("output_dir")) out = doc["output_dir"].get<std::string>();
            doc.erase("output_dir");
            qdf::run_sweep(doc, out);
        }
    } catch (const qdf::stability_threshold_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const qdf::domain_exit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const qdf::blowup_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qdf::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
