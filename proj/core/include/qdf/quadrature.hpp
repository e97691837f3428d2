#pragma once

#include <span>

namespace qdf {

/// Composite trapezoid estimate of the integral of uniformly sampled data.
/// Requires at least 2 samples. Droplet integrands decay exponentially, so
/// the trapezoid rule converges spectrally here.
double integrate(std::span<const double> samples, double dx);

}  // namespace qdf
