#include "qdf/fft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qdf/errors.hpp"

namespace qdf {

Fft::Fft(std::size_t n) : n_(n), bitrev_(n), twiddle_(n / 2) {
    if (n < 2 || !std::has_single_bit(n)) {
        throw config_error("fft: size must be a power of two >= 2, got " + std::to_string(n));
    }
    const int bits = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
        bitrev_[i] = r;
    }
    // e^{-2 pi i j / n}; table lookup per butterfly keeps twiddles at 1 ulp
    for (std::size_t j = 0; j < n / 2; ++j) {
        twiddle_[j] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) /
                                          static_cast<double>(n));
    }
}

void Fft::transform(std::vector<std::complex<double>>& a, bool inverse) const {
    if (a.size() != n_) throw config_error("fft: data size mismatch");

    for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t r = bitrev_[i];
        if (i < r) std::swap(a[i], a[r]);
    }

    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n_ / len;
        for (std::size_t block = 0; block < n_; block += len) {
            for (std::size_t j = 0; j < half; ++j) {
                std::complex<double> w = twiddle_[j * step];
                if (inverse) w = std::conj(w);
                const std::complex<double> u = a[block + j];
                const std::complex<double> v = a[block + j + half] * w;
                a[block + j] = u + v;
                a[block + j + half] = u - v;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n_);
        for (auto& z : a) z *= scale;
    }
}

void Fft::forward(std::vector<std::complex<double>>& data) const { transform(data, false); }
void Fft::inverse(std::vector<std::complex<double>>& data) const { transform(data, true); }

void spectral_second_derivative(const Fft& fft, const std::vector<double>& k_values,
                                std::vector<std::complex<double>>& values) {
    fft.forward(values);
    for (std::size_t j = 0; j < values.size(); ++j) {
        values[j] *= -k_values[j] * k_values[j];
    }
    fft.inverse(values);
}

std::vector<std::complex<double>> spectral_upsample2(const Fft& fft,
                                                     const std::vector<std::complex<double>>& values) {
    const std::size_t n = fft.size();
    if (values.size() != n) throw config_error("fft: upsample size mismatch");

    std::vector<std::complex<double>> spec = values;
    fft.forward(spec);

    std::vector<std::complex<double>> padded(2 * n, std::complex<double>(0.0, 0.0));
    for (std::size_t j = 0; j < n / 2; ++j) padded[j] = spec[j];
    for (std::size_t j = n / 2 + 1; j < n; ++j) padded[n + j] = spec[j];
    // split the Nyquist bin so even samples reproduce the input exactly
    padded[n / 2] = 0.5 * spec[n / 2];
    padded[2 * n - n / 2] = 0.5 * spec[n / 2];

    Fft fine(2 * n);
    fine.inverse(padded);
    for (auto& z : padded) z *= 2.0;
    return padded;
}

}  // namespace qdf
