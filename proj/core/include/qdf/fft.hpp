#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qdf {

/// Radix-2 complex FFT for power-of-two sizes.
///
/// Twiddle tables are precomputed per instance, so transforms are
/// allocation-free and bit-reproducible run to run. Forward uses the
/// e^{-ikx} sign convention; inverse applies the 1/n scaling.
class Fft {
public:
    explicit Fft(std::size_t n);

    std::size_t size() const { return n_; }

    void forward(std::vector<std::complex<double>>& data) const;
    void inverse(std::vector<std::complex<double>>& data) const;

private:
    void transform(std::vector<std::complex<double>>& data, bool inverse) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    // twiddles for all stages, forward sign; conjugated on the fly for inverse
    std::vector<std::complex<double>> twiddle_;
};

/// In-place spectral second derivative: f -> f'' using the grid wavenumbers.
void spectral_second_derivative(const Fft& fft, const std::vector<double>& k_values,
                                std::vector<std::complex<double>>& values);

/// Zero-padded spectral upsampling by 2x. Exact for fields band-limited to
/// the source grid; original samples are reproduced at even indices.
std::vector<std::complex<double>> spectral_upsample2(const Fft& fft,
                                                     const std::vector<std::complex<double>>& values);

}  // namespace qdf
