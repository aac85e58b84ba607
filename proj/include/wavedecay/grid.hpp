#ifndef WAVEDECAY_GRID_HPP
#define WAVEDECAY_GRID_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wavedecay/fft.hpp"
#include "wavedecay/parallel.hpp"

namespace wavedecay {

// Uniform periodic grid on [-X, X): n power-of-two nodes x_j = -X + j h,
// h = 2X/n, wavenumbers xi_k = k pi/X for k = -n/2 .. n/2-1 in DFT index
// order (k and k - n share an index for k >= n/2).
class grid {
public:
    grid(std::size_t n_points, double half_length);

    std::size_t n() const { return n_; }
    double half_length() const { return x_; }
    double spacing() const { return h_; }
    double dxi() const { return dxi_; }
    double nyquist() const { return dxi_ * static_cast<double>(n_ / 2); }

    double node(std::size_t j) const { return -x_ + h_ * static_cast<double>(j); }
    double wavenumber(std::size_t k) const {
        const auto half = n_ / 2;
        const double ks = k < half ? static_cast<double>(k)
                                   : static_cast<double>(k) - static_cast<double>(n_);
        return ks * dxi_;
    }
    // (-1)^k, the phase that moves the origin of the transform to x_0 = -X
    double parity(std::size_t k) const { return (k & 1) ? -1.0 : 1.0; }
    std::size_t mirror(std::size_t j) const { return j == 0 ? 0 : n_ - j; }

private:
    std::size_t n_;
    double x_;
    double h_;
    double dxi_;
};

// Unitary-convention spectral pairing on a grid:
//   u_hat_k = (h/sqrt(2 pi)) (-1)^k sum_j u_j e^{-2 pi i jk/n}
//   u_j     = (dxi/sqrt(2 pi)) sum_k (-1)^k u_hat_k e^{+2 pi i jk/n}
// h * dxi * n = 2 pi makes the pair exact inverses of each other.
std::vector<std::complex<double>> forward_unitary(const grid& g, const fft_plan& plan,
                                                  std::span<const double> samples,
                                                  exec mode = exec::omp);
// max_imag_rel, when non-null, receives max|Im| / max|Re| before discarding
// the imaginary part.
std::vector<double> inverse_unitary(const grid& g, const fft_plan& plan,
                                    std::vector<std::complex<double>> coeffs,
                                    exec mode = exec::omp, double* max_imag_rel = nullptr);

}  // namespace wavedecay

#endif
