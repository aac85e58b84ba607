#include "wavedecay/grid.hpp"

#include <cmath>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {
constexpr double kSqrt2Pi = 2.50662827463100050240;
}

grid::grid(std::size_t n_points, double half_length) : n_(n_points), x_(half_length) {
    if (!is_power_of_two(n_points) || n_points < 256) {
        std::ostringstream os;
        os << "grid: n = " << n_points << " must be a power of two >= 256";
        throw grid_error(os.str());
    }
    if (!(half_length > 0.0))
        throw grid_error("grid: half-length X must be positive");
    h_ = 2.0 * x_ / static_cast<double>(n_);
    dxi_ = M_PI / x_;
}

std::vector<std::complex<double>> forward_unitary(const grid& g, const fft_plan& plan,
                                                  std::span<const double> samples,
                                                  exec mode) {
    const std::size_t n = g.n();
    std::vector<std::complex<double>> out(n);
    par::for_each(n, mode, [&](std::size_t j) { out[j] = samples[j]; });
    plan.forward(out.data(), mode);
    const double scale = g.spacing() / kSqrt2Pi;
    par::for_each(n, mode, [&](std::size_t k) { out[k] *= scale * g.parity(k); });
    return out;
}

std::vector<double> inverse_unitary(const grid& g, const fft_plan& plan,
                                    std::vector<std::complex<double>> coeffs,
                                    exec mode, double* max_imag_rel) {
    const std::size_t n = g.n();
    const double scale = g.dxi() / kSqrt2Pi;
    par::for_each(n, mode, [&](std::size_t k) { coeffs[k] *= scale * g.parity(k); });
    plan.inverse(coeffs.data(), mode);
    if (max_imag_rel) {
        const double mi = par::max_value(n, mode,
                                         [&](std::size_t j) { return std::fabs(coeffs[j].imag()); });
        const double mr = par::max_value(n, mode,
                                         [&](std::size_t j) { return std::fabs(coeffs[j].real()); });
        *max_imag_rel = mr > 0.0 ? mi / mr : mi;
    }
    std::vector<double> out(n);
    par::for_each(n, mode, [&](std::size_t j) { out[j] = coeffs[j].real(); });
    return out;
}

}  // namespace wavedecay
