#include "qdf/wigner.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qdf/diagnostics.hpp"
#include "qdf/errors.hpp"
#include "qdf/fft.hpp"
#include "qdf/parallel.hpp"
#include "qdf/quadrature.hpp"

namespace qdf {

std::vector<double> WignerMap::x_marginal() const {
    const double dp = p_values.size() > 1 ? p_values[1] - p_values[0] : 0.0;
    std::vector<double> marg(x_grid->size());
    for (std::size_t i = 0; i < x_grid->size(); ++i) {
        marg[i] = integrate({values.data() + i * n_p(), n_p()}, dp);
    }
    return marg;
}

std::vector<double> WignerMap::p_marginal() const {
    std::vector<double> marg(n_p());
    std::vector<double> column(x_grid->size());
    for (std::size_t j = 0; j < n_p(); ++j) {
        for (std::size_t i = 0; i < x_grid->size(); ++i) column[i] = at(i, j);
        marg[j] = integrate(column, x_grid->dx());
    }
    return marg;
}

WignerMap wigner(const ComplexField& psi, double p_min, double p_max, std::size_t n_p) {
    if (n_p < 2) throw config_error("wigner: need at least 2 momentum samples");
    if (!(p_max > p_min)) throw config_error("wigner: need p_max > p_min");
    const SpatialGrid& g = psi.grid();
    const std::size_t n = g.size();

    // half-grid field by band-limited upsampling; fine[2j] == psi[j]
    Fft fft(n);
    const std::vector<complex> fine = spectral_upsample2(fft, psi.values());
    const std::size_t nf = fine.size();
    const double h = 0.5 * g.dx();

    std::vector<double> fine_abs(nf);
    double peak = 0.0;
    for (std::size_t j = 0; j < nf; ++j) {
        fine_abs[j] = std::abs(fine[j]);
        peak = std::max(peak, fine_abs[j]);
    }
    if (!(peak > 0.0)) throw config_error("wigner: zero field");
    const double c_cut = (1e-12 * peak) * peak;

    WignerMap map;
    map.x_grid = psi.grid_ptr();
    map.p_values.resize(n_p);
    const double dp = (p_max - p_min) / static_cast<double>(n_p - 1);
    for (std::size_t j = 0; j < n_p; ++j) map.p_values[j] = p_min + static_cast<double>(j) * dp;
    map.values.assign(n * n_p, 0.0);

    std::vector<double> column_residue(n, 0.0);
    const double inv_pi_h = h / std::numbers::pi;

    parallel_for(n, [&](std::size_t i) {
        const std::size_t f = 2 * i;
        std::size_t m_limit = std::min(f, nf - 1 - f);
        // truncate the correlation where both factors have decayed
        std::size_t M = 0;
        for (std::size_t m = m_limit; m > 0; --m) {
            if (fine_abs[f + m] * fine_abs[f - m] >= c_cut) {
                M = m;
                break;
            }
        }
        if (M == 0 && fine_abs[f] * fine_abs[f] < c_cut) return;  // empty column

        std::vector<complex> corr(2 * M + 1);
        for (std::size_t idx = 0; idx < corr.size(); ++idx) {
            const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(idx) - static_cast<std::ptrdiff_t>(M);
            corr[idx] = std::conj(fine[f + m]) * fine[f - m];
        }

        double residue = 0.0;
        for (std::size_t j = 0; j < n_p; ++j) {
            const double phi = 2.0 * h * map.p_values[j];
            const complex w_step = std::polar(1.0, phi);
            // start phasor at m = -M, advance by one step per sample
            complex ph = std::polar(1.0, -phi * static_cast<double>(M));
            complex acc(0.0, 0.0);
            for (std::size_t idx = 0; idx < corr.size(); ++idx) {
                acc += corr[idx] * ph;
                ph *= w_step;
            }
            acc *= inv_pi_h;
            map.values[i * n_p + j] = acc.real();
            residue = std::max(residue, std::abs(acc.imag()));
        }
        column_residue[i] = residue;
    });

    for (double r : column_residue) map.imag_residue = std::max(map.imag_residue, r);

    const auto marg = map.x_marginal();
    map.mass = integrate(marg, g.dx());
    const double n_field = norm(psi);
    const double deficit = std::abs(map.mass - n_field) / n_field;
    if (deficit > 1e-3) {
        throw wigner_window_error(
            "wigner: momentum window [" + std::to_string(p_min) + ", " + std::to_string(p_max) +
                "] misses the field (relative mass deficit " + std::to_string(deficit) + ")",
            deficit);
    }
    return map;
}

}  // namespace qdf
