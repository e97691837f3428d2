#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "qdf/errors.hpp"
#include "qdf/grid.hpp"

namespace qdf {

using complex = std::complex<double>;

/// Complex wavefunction samples on a shared SpatialGrid.
///
/// Value-semantic; the grid is shared immutably so snapshots are cheap to
/// copy around between threads.
class ComplexField {
public:
    ComplexField(std::shared_ptr<const SpatialGrid> grid, std::vector<complex> values)
        : grid_(std::move(grid)), values_(std::move(values)) {
        if (!grid_) throw config_error("field: null grid");
        if (values_.size() != grid_->size()) {
            throw config_error("field: value count does not match grid size");
        }
    }

    /// Zero field on the given grid.
    explicit ComplexField(std::shared_ptr<const SpatialGrid> grid)
        : ComplexField(grid, std::vector<complex>(grid ? grid->size() : 0)) {}

    const SpatialGrid& grid() const { return *grid_; }
    std::shared_ptr<const SpatialGrid> grid_ptr() const { return grid_; }

    std::size_t size() const { return values_.size(); }
    const std::vector<complex>& values() const { return values_; }
    std::vector<complex>& values() { return values_; }
    complex operator[](std::size_t j) const { return values_[j]; }

    std::vector<double> density() const {
        std::vector<double> rho(values_.size());
        for (std::size_t j = 0; j < values_.size(); ++j) rho[j] = std::norm(values_[j]);
        return rho;
    }

    bool finite() const {
        for (const auto& z : values_) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
        return true;
    }

private:
    std::shared_ptr<const SpatialGrid> grid_;
    std::vector<complex> values_;
};

}  // namespace qdf
