#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace qdf {

/// FNV-1a 64-bit checksum of a file's bytes.
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

/// Reproducibility record written as the final act of a run; its presence
/// marks the run complete, and its embedded config re-runs it.
struct RunManifest {
    nlohmann::json config;          ///< resolved configuration
    std::string convention;         ///< kinetic convention used
    std::string version;
    double duration_seconds = 0.0;
    nlohmann::json notes;           ///< run-specific annotations (e.g. entropy variant)
    std::vector<std::filesystem::path> files;  ///< data files, relative to the manifest

    nlohmann::json to_json(const std::filesystem::path& base_dir) const;
};

/// Serializes the manifest (computing file sizes and checksums) and writes
/// it atomically next to the data files.
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace qdf
