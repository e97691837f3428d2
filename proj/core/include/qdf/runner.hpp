#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdf/config.hpp"
#include "qdf/manifest.hpp"

namespace qdf {

/// Full numeric pipeline: seed the analytic state, evolve with the
/// split-step scheme, emit time series + probe series + boundary snapshots,
/// write the manifest last.
RunManifest run(const RunConfig& cfg);

/// Closed-form pipeline: same outputs as run() but sampled from the exact
/// solution on the recording cadence (no time stepping).
RunManifest run_analytic(const RunConfig& cfg);

/// Wigner map of the analytic state at diagnostics.wigner.time.
RunManifest run_wigner(const RunConfig& cfg);

/// Entropy series of the analytic state on the recording cadence.
RunManifest run_entropy(const RunConfig& cfg);

/// Noise-robustness protocol for the configured trap. The default pass
/// threshold is 10% (constant trap) or 12% (modulated). With enforce set,
/// throws stability_threshold_error after writing outputs if the report
/// fails.
RunManifest run_stability(const RunConfig& cfg, bool enforce = false,
                          std::optional<double> threshold = std::nullopt);

/// Figure presets fig1..fig10.
bool is_preset(const std::string& name);
std::vector<std::string> preset_names();
RunManifest run_preset(const std::string& name, const std::filesystem::path& out_dir,
                       std::uint64_t seed = 1);

/// Cartesian product sweep: the document's "sweep" object maps dotted keys
/// to value arrays; every combination runs the numeric pipeline in its own
/// subdirectory (combinations execute in parallel).
RunManifest run_sweep(nlohmann::json doc, const std::filesystem::path& out_dir);

}  // namespace qdf
