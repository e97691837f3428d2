#include "qdf/csv.hpp"

#include <cstdio>
#include <fstream>

#include "qdf/diagnostics.hpp"
#include "qdf/errors.hpp"
#include "qdf/propagator.hpp"

namespace qdf {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable newlines
    if (!out) throw config_error("cannot open output file " + path.string());
    return out;
}

void put_row(std::ofstream& out, std::initializer_list<double> vals) {
    bool first = true;
    for (double v : vals) {
        if (!first) out << ',';
        out << format_double(v);
        first = false;
    }
    out << '\n';
}

}  // namespace

void write_time_series_csv(const std::filesystem::path& path, const EvolutionRecord& record,
                           const std::vector<double>& entropy) {
    auto out = open_out(path);
    out << csv_header::kTimeSeries << '\n';
    for (std::size_t i = 0; i < record.times.size(); ++i) {
        const double s = i < entropy.size() ? entropy[i] : 0.0;
        put_row(out, {record.times[i], record.norms[i], record.centers_of_mass[i],
                      record.peak_positions[i], s});
    }
}

void write_snapshot_csv(const std::filesystem::path& path, const ComplexField& psi) {
    auto out = open_out(path);
    out << csv_header::kSnapshot << '\n';
    for (std::size_t j = 0; j < psi.size(); ++j) {
        const complex z = psi[j];
        put_row(out, {psi.grid().x(j), z.real(), z.imag(), std::norm(z)});
    }
}

void write_probe_csv(const std::filesystem::path& path, const std::vector<double>& times,
                     const std::vector<double>& density) {
    if (times.size() != density.size()) throw config_error("probe csv: length mismatch");
    auto out = open_out(path);
    out << csv_header::kProbe << '\n';
    for (std::size_t i = 0; i < times.size(); ++i) put_row(out, {times[i], density[i]});
}

void write_entropy_csv(const std::filesystem::path& path, const EntropySeries& series) {
    auto out = open_out(path);
    out << csv_header::kEntropy << '\n';
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        put_row(out, {series.times[i], series.entropy[i]});
    }
}

void write_wigner_csv(const std::filesystem::path& path, const WignerMap& map) {
    auto out = open_out(path);
    out << "x";
    for (std::size_t i = 0; i < map.x_grid->size(); ++i) {
        out << ',' << format_double(map.x_grid->x(i));
    }
    out << '\n' << "p";
    for (double p : map.p_values) out << ',' << format_double(p);
    out << '\n';
    for (std::size_t i = 0; i < map.x_grid->size(); ++i) {
        for (std::size_t j = 0; j < map.n_p(); ++j) {
            if (j) out << ',';
            out << format_double(map.at(i, j));
        }
        out << '\n';
    }
}

void write_stability_csv(const std::filesystem::path& path, const SpatialGrid& grid,
                         const std::vector<double>& clean, const std::vector<double>& mean_noisy,
                         const std::vector<double>& sd) {
    auto out = open_out(path);
    out << csv_header::kStability << '\n';
    for (std::size_t j = 0; j < grid.size(); ++j) {
        put_row(out, {grid.x(j), clean[j], mean_noisy[j], sd[j]});
    }
}

}  // namespace qdf
