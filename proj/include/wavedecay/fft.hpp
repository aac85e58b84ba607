#ifndef WAVEDECAY_FFT_HPP
#define WAVEDECAY_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "wavedecay/parallel.hpp"

namespace wavedecay {

// Iterative radix-2 transform for power-of-two sizes, unnormalized:
//   forward:  a_k <- sum_j a_j e^{-2 pi i jk/n}
//   inverse:  a_j <- sum_k a_k e^{+2 pi i jk/n}
// Butterflies within a stage are independent, so exec::seq and exec::omp
// run the same arithmetic per element and agree bit for bit.
class fft_plan {
public:
    explicit fft_plan(std::size_t n);

    std::size_t size() const { return n_; }
    void forward(std::complex<double>* data, exec mode = exec::omp) const;
    void inverse(std::complex<double>* data, exec mode = exec::omp) const;

private:
    void transform(std::complex<double>* data, bool fwd, exec mode) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<std::complex<double>> twiddle_;  // e^{-2 pi i k/n}, k < n/2
};

bool is_power_of_two(std::size_t n);

}  // namespace wavedecay

#endif
