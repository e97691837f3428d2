#include "qdf/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qdf/errors.hpp"

namespace qdf {

SpatialGrid::SpatialGrid(std::size_t n_points, double x_min, double dx)
    : n_(n_points), x_min_(x_min), dx_(dx), k_(n_points) {
    const double dk = 2.0 * std::numbers::pi / (static_cast<double>(n_) * dx_);
    for (std::size_t j = 0; j < n_; ++j) {
        const auto sj = static_cast<std::ptrdiff_t>(j);
        const auto sn = static_cast<std::ptrdiff_t>(n_);
        k_[j] = dk * static_cast<double>(sj < sn / 2 ? sj : sj - sn);
    }
}

double SpatialGrid::k_max() const {
    return std::numbers::pi / dx_;
}

std::vector<double> SpatialGrid::positions() const {
    std::vector<double> xs(n_);
    for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
    return xs;
}

SpatialGrid make_grid(std::size_t n_points, double x_min, double dx) {
    if (n_points < 2 || !std::has_single_bit(n_points)) {
        throw config_error("grid: n_points must be a power of two >= 2, got " +
                           std::to_string(n_points));
    }
    if (!(dx > 0.0) || !std::isfinite(dx)) {
        throw config_error("grid: dx must be positive and finite");
    }
    if (!std::isfinite(x_min)) {
        throw config_error("grid: x_min must be finite");
    }
    return SpatialGrid(n_points, x_min, dx);
}

SpatialGrid make_centered_grid(std::size_t n_points, double dx) {
    return make_grid(n_points, -0.5 * static_cast<double>(n_points) * dx, dx);
}

}  // namespace qdf
