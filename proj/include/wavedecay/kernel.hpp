#ifndef WAVEDECAY_KERNEL_HPP
#define WAVEDECAY_KERNEL_HPP

#include <cstddef>
#include <vector>

#include "wavedecay/grid.hpp"
#include "wavedecay/symbols.hpp"

namespace wavedecay {

// H_c = F^{-1}(m/(c_eff - m)) sampled on a periodic grid.
struct kernel_samples {
    grid g;
    std::vector<double> values;
    dispersion_symbol symbol;
    double speed;
    double c_eff;
};

kernel_samples compute_kernel(const dispersion_symbol& sym, double c, const grid& g,
                              exec mode = exec::omp);

// h * sum of values: the periodic trapezoid rule over one period.
double trapezoid_integral(const kernel_samples& k, exec mode = exec::omp);

// e^{-delta_c X}: a priori bound on the periodic-truncation error of the tail.
double wrap_error_bound(double delta_c, const grid& g);

struct origin_fit_report {
    enum class model_kind { power, log };
    model_kind model;         // better model by r^2
    double exponent;          // power-model slope of ln|H| vs ln|x| (-> -1-m0)
    double log_slope;         // log-model slope of ln|H| vs ln|ln|x||
    double r2_power;
    double r2_log;
    std::size_t nodes;
    double x_lo, x_hi;
};

// Fits |H| ~ |x|^a (power) and |H| ~ |ln x|^b (log) on 0 < x_lo < x_hi <= 0.5.
origin_fit_report near_origin_exponent(const kernel_samples& k, double x_lo, double x_hi);

struct tail_fit_report {
    double delta_hat;
    double prefactor_hat;
    double residual;  // max |deviation| of the ln|H| regression
    std::size_t nodes;
    double x_lo, x_hi;
};

// Linear regression of ln|H| vs x on [x_lo, x_hi]; requires x_hi <= 0.8 X and
// |H| above 100x machine epsilon on the window.
tail_fit_report tail_decay_fit(const kernel_samples& k, double x_lo, double x_hi);

// Residue prefactor C = sqrt(2 pi) c_eff / g'(delta_c) with g = m(i .);
// g' by centered differences with Richardson refinement. Cross-checked
// against the closed forms for whitham and bidirectional-whitham.
double analytic_prefactor(const dispersion_symbol& sym, double c, double delta_c);

// (delta_c, C, n, window, residual) for a computed kernel; n = 0 for the
// built-in symbols (g'(delta_c) != 0 is checked).
struct kernel_decay_model {
    double delta_c;
    double prefactor;
    int poly_order;
    double fit_window_lo, fit_window_hi;
    double fit_residual;
};

kernel_decay_model fit_decay_model(const kernel_samples& k, double x_lo, double x_hi);

// Default fit windows: origin (4h, 0.2), tail (max(10, 5/delta_c), 0.5 X).
std::pair<double, double> default_origin_window(const grid& g);
std::pair<double, double> default_tail_window(const grid& g, double delta_c);

}  // namespace wavedecay

#endif
