#include "qdf/manifest.hpp"

#include <cstdio>
#include <fstream>

#include "qdf/errors.hpp"
#include "qdf/version.hpp"

namespace qdf {

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("manifest: cannot read " + path.string());
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 0x100000001b3ull;
        }
    }
    return hash;
}

nlohmann::json RunManifest::to_json(const std::filesystem::path& base_dir) const {
    nlohmann::json doc;
    doc["config"] = config;
    doc["convention"] = convention;
    doc["version"] = version.empty() ? kVersion : version;
    doc["duration_seconds"] = duration_seconds;
    if (!notes.is_null()) doc["notes"] = notes;

    nlohmann::json inventory = nlohmann::json::array();
    for (const auto& rel : files) {
        const auto full = base_dir / rel;
        char hex[24];
        std::snprintf(hex, sizeof hex, "%016llx",
                      static_cast<unsigned long long>(fnv1a64_file(full)));
        inventory.push_back({{"path", rel.generic_string()},
                             {"bytes", std::filesystem::file_size(full)},
                             {"fnv1a64", hex}});
    }
    doc["files"] = inventory;
    return doc;
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    const auto doc = manifest.to_json(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw config_error("manifest: cannot open " + tmp);
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace qdf
