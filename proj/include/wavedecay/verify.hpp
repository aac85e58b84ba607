#ifndef WAVEDECAY_VERIFY_HPP
#define WAVEDECAY_VERIFY_HPP

#include <cstddef>

#include "wavedecay/wave_solver.hpp"

namespace wavedecay {

struct decay_verdict {
    double delta_hat;
    double delta_c_reference;
    double relative_error;
    double plateau_value;  // median of e^{delta_ref |x-crest|}|u| over the window
    double window_lo, window_hi;
    std::size_t nodes;
};

struct symmetry_verdict {
    double crest_location;  // argmax with quadratic sub-grid refinement
    double sup_asymmetry;
    std::size_t crest_count;
    bool g_nonnegative;
    bool g_increasing;
    bool lipschitz_ok;         // measured c~ < c_eff on range(u)
    double lipschitz_constant;
    double amplitude;
};

// Relative noise floor for converged-solution tails: samples below
// floor * amplitude carry no decay information on a truncated grid.
inline constexpr double solution_tail_floor = 1e-13;

double crest_location(const grid& g, std::span<const double> samples);

// ln|u| vs |x - crest| regression over window nodes above the tail floor.
decay_verdict fit_solution_decay(const solitary_wave& wave, double delta_c_reference,
                                 double window_lo, double window_hi);

// max_j |x_j - crest|^l |u_j|
double weighted_sup_norm(const solitary_wave& wave, double l);

// h * sum e^{delta |x - crest|} |u| over samples above the tail floor
double weighted_exp_l1(const solitary_wave& wave, double delta);

// Crest location, spectrally interpolated reflection asymmetry, crest count,
// and the symmetry-theorem hypotheses sampled on range(u).
symmetry_verdict check_symmetry(const solitary_wave& wave, double tol = 1e-10);

}  // namespace wavedecay

#endif
