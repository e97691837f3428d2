#pragma once

#include <limits>
#include <vector>

#include "qdf/field.hpp"

namespace qdf {

struct EvolutionRecord;  // propagator.hpp

/// Trapezoid norm N = integral of |psi|^2.
double norm(const ComplexField& psi);

/// <x> = integral of x |psi|^2 / N.
double center_of_mass(const ComplexField& psi);

/// Grid position of the density maximum.
double peak_position(const ComplexField& psi);

/// |psi|^2 at x_probe by linear interpolation; x_probe must lie on the grid.
double density_at(const ComplexField& psi, double x_probe);

struct EntropyOptions {
    /// Use the unit-normalized density rho/N inside the logarithm (default).
    /// The raw-density variant matches the literal integrand but is only
    /// meaningful for N = 1.
    bool normalized = true;
    /// Optional restriction to [window_lo, window_hi]; the density is
    /// renormalized within the window when `normalized` is set.
    double window_lo = -std::numeric_limits<double>::infinity();
    double window_hi = std::numeric_limits<double>::infinity();
};

/// Position-space Shannon entropy S = -integral rho ln rho (nats).
/// Points with rho < 1e-300 contribute zero. Throws on zero-norm fields.
double shannon_entropy(const ComplexField& psi, const EntropyOptions& options = {});

struct EntropySeries {
    std::vector<double> times;
    std::vector<double> entropy;
};

/// Shannon entropy per stored snapshot; the record must carry snapshots.
EntropySeries entropy_series(const EvolutionRecord& record, const EntropyOptions& options = {});

}  // namespace qdf
