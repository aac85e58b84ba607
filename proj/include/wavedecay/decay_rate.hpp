#ifndef WAVEDECAY_DECAY_RATE_HPP
#define WAVEDECAY_DECAY_RATE_HPP

#include <cstddef>

#include "wavedecay/symbols.hpp"

namespace wavedecay {

struct decay_rate_result {
    double delta_c;
    std::size_t iterations;
    double bracket_lo;
    double bracket_hi;
    double residual;  // |g(delta_c) - c_eff|
};

// Unique root of g(delta) = m(i delta) = c_eff on (0, strip_height).
// Bisection to bracket width 1e-14, then one Newton polish step with a
// finite-difference derivative. For a differentiating symbol pass
// invert(sym) and 1/c (the m(z0)^{-1} = 1/c route).
decay_rate_result solve_delta(const dispersion_symbol& sym, double c);

}  // namespace wavedecay

#endif
