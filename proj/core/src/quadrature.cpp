#include "qdf/quadrature.hpp"

#include "qdf/errors.hpp"

namespace qdf {

double integrate(std::span<const double> samples, double dx) {
    if (samples.size() < 2) throw config_error("integrate: need at least 2 samples");
    double acc = 0.5 * (samples.front() + samples.back());
    for (std::size_t j = 1; j + 1 < samples.size(); ++j) acc += samples[j];
    return acc * dx;
}

}  // namespace qdf
