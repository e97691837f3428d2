#pragma once

#include <cstddef>
#include <vector>

namespace qdf {

/// Uniform 1D grid in oscillator units. Immutable after construction.
///
/// Positions are x_j = x_min + j*dx. Wavenumbers follow the standard DFT
/// layout (non-negative frequencies first, then negative), with
/// |k|_max = pi/dx, so spectral derivatives are a plain per-bin multiply.
class SpatialGrid {
public:
    SpatialGrid(std::size_t n_points, double x_min, double dx);

    std::size_t size() const { return n_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_min_ + static_cast<double>(n_ - 1) * dx_; }
    double dx() const { return dx_; }
    double length() const { return static_cast<double>(n_) * dx_; }

    double x(std::size_t j) const { return x_min_ + static_cast<double>(j) * dx_; }
    double k(std::size_t j) const { return k_[j]; }
    const std::vector<double>& k_values() const { return k_; }
    double k_max() const;

    std::vector<double> positions() const;

    bool contains(double x_probe) const { return x_probe >= x_min() && x_probe <= x_max(); }

private:
    std::size_t n_;
    double x_min_;
    double dx_;
    std::vector<double> k_;
};

/// Builds a grid for the spectral propagator. n_points must be a power of
/// two and dx positive; throws config_error otherwise.
SpatialGrid make_grid(std::size_t n_points, double x_min, double dx);

/// Convenience: grid of n points centred on x=0 (x spans [-n/2, n/2)*dx).
SpatialGrid make_centered_grid(std::size_t n_points, double dx);

}  // namespace qdf
