#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qdf/field.hpp"
#include "qdf/wigner.hpp"

namespace qdf {

struct EvolutionRecord;
struct EntropySeries;

/// Stable CSV headers (golden-filed by the tests).
namespace csv_header {
inline constexpr const char* kTimeSeries = "t,norm,x_cm,x_peak,S_rho";
inline constexpr const char* kSnapshot = "x,re,im,density";
inline constexpr const char* kProbe = "t,density";
inline constexpr const char* kEntropy = "t,S_rho";
inline constexpr const char* kStability = "x,clean_density,mean_noisy_density,sd";
}  // namespace csv_header

/// All floats are emitted with 17 significant digits so re-runs are
/// byte-comparable.
std::string format_double(double v);

void write_time_series_csv(const std::filesystem::path& path, const EvolutionRecord& record,
                           const std::vector<double>& entropy);
void write_snapshot_csv(const std::filesystem::path& path, const ComplexField& psi);
void write_probe_csv(const std::filesystem::path& path, const std::vector<double>& times,
                     const std::vector<double>& density);
void write_entropy_csv(const std::filesystem::path& path, const EntropySeries& series);
/// Wigner grid: 2 header lines carry the x and p axes, then row-major values
/// (one row of p-samples per x).
void write_wigner_csv(const std::filesystem::path& path, const WignerMap& map);
void write_stability_csv(const std::filesystem::path& path, const SpatialGrid& grid,
                         const std::vector<double>& clean, const std::vector<double>& mean_noisy,
                         const std::vector<double>& sd);

}  // namespace qdf
