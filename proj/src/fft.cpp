#include "wavedecay/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace wavedecay {

bool is_power_of_two(std::size_t n) {
    return n >= 2 && (n & (n - 1)) == 0;
}

fft_plan::fft_plan(std::size_t n) : n_(n) {
    if (!is_power_of_two(n))
        throw std::invalid_argument("fft_plan: size must be a power of two >= 2");

    bitrev_.resize(n);
    bitrev_[0] = 0;
    std::size_t log2n = 0;
    while ((std::size_t{1} << log2n) < n) ++log2n;
    for (std::size_t i = 1; i < n; ++i)
        bitrev_[i] = (bitrev_[i >> 1] >> 1) | ((i & 1) << (log2n - 1));

    twiddle_.resize(n / 2);
    const double step = -2.0 * M_PI / static_cast<double>(n);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double a = step * static_cast<double>(k);
        twiddle_[k] = {std::cos(a), std::sin(a)};
    }
}

void fft_plan::transform(std::complex<double>* data, bool fwd, exec mode) const {
    par::for_each(n_, mode, [&](std::size_t i) {
        const std::size_t r = bitrev_[i];
        if (i < r) std::swap(data[i], data[r]);
    });

    const std::size_t half_n = n_ / 2;
    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t stride = n_ / len;
        par::for_each(half_n, mode, [&](std::size_t b) {
            const std::size_t blk = b / half;
            const std::size_t j = b - blk * half;
            const std::size_t i0 = blk * len + j;
            const std::size_t i1 = i0 + half;
            std::complex<double> w = twiddle_[j * stride];
            if (!fwd) w = std::conj(w);
            const std::complex<double> t = data[i1] * w;
            data[i1] = data[i0] - t;
            data[i0] += t;
        });
    }
}

void fft_plan::forward(std::complex<double>* data, exec mode) const {
    transform(data, true, mode);
}

void fft_plan::inverse(std::complex<double>* data, exec mode) const {
    transform(data, false, mode);
}

}  // namespace wavedecay
