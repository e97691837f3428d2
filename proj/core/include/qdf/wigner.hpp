#pragma once

#include <memory>
#include <vector>

#include "qdf/field.hpp"
#include "qdf/grid.hpp"

namespace qdf {

/// Real-valued quasi-probability samples on the (x, p) product grid,
/// row-major over x. May take negative values.
struct WignerMap {
    std::shared_ptr<const SpatialGrid> x_grid;
    std::vector<double> p_values;
    std::vector<double> values;  ///< values[i * n_p + j] = W(x_i, p_j)
    double imag_residue = 0.0;   ///< max |Im| of the raw transform
    double mass = 0.0;           ///< trapezoid integral of W over x and p

    std::size_t n_p() const { return p_values.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * n_p() + j]; }

    std::vector<double> x_marginal() const;  ///< trapezoid over p, per x
    std::vector<double> p_marginal() const;  ///< trapezoid over x, per p
};

/// W(x,p) = (1/pi) integral of psi*(x+x0) psi(x-x0) e^{2 i x0 p} dx0.
///
/// The correlation is sampled at half-grid offsets; the half-grid field
/// values come from 2x spectral upsampling, which is exact for fields
/// band-limited to the grid. The x0 range is truncated where |psi| drops
/// below 1e-12 of its peak. Throws wigner_window_error when the momentum
/// window misses the field (total mass deviates from the norm by > 1e-3
/// relative).
WignerMap wigner(const ComplexField& psi, double p_min, double p_max, std::size_t n_p);

}  // namespace qdf
