#ifndef WAVEDECAY_ERRORS_HPP
#define WAVEDECAY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wavedecay {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// imaginary-axis evaluation outside the analyticity strip
struct domain_error : error {
    using error::error;
};

// invert() on a symbol that is not strictly positive and unbounded
struct inversion_error : error {
    using error::error;
};

// speed outside the supercritical (or differentiating-case) range
struct admissibility_error : error {
    using error::error;
};

struct grid_error : error {
    using error::error;
};

struct fit_error : error {
    explicit fit_error(const std::string& msg, double floor = 0.0)
        : error(msg), measured_floor(floor) {}
    double measured_floor;
};

// c_eff <= m(0): the decay-rate equation has no root in the strip
struct not_supercritical : error {
    using error::error;
};

struct bracket_error : error {
    using error::error;
};

// c_eff - m(xi_k) vanishes on a grid wavenumber
struct resonance_error : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

// g'(delta_c) ~ 0: the decay model would need poly_order > 0
struct degenerate_error : error {
    using error::error;
};

struct trivial_collapse : error {
    using error::error;
};

struct divergence_error : error {
    using error::error;
};

struct non_convergence : error {
    non_convergence(const std::string& msg, std::vector<double> history)
        : error(msg), residual_history(std::move(history)) {}
    std::vector<double> residual_history;
};

}  // namespace wavedecay

#endif
