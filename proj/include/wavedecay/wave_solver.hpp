#ifndef WAVEDECAY_WAVE_SOLVER_HPP
#define WAVEDECAY_WAVE_SOLVER_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wavedecay/grid.hpp"
#include "wavedecay/symbols.hpp"

namespace wavedecay {

// Nonlinear term G of c_eff u - L u - G(u) = 0.
struct nonlinearity {
    std::string name;
    double degree;  // r in the |G(u)| <~ |u|^r bound near 0
    std::function<double(double)> g;

    double operator()(double u) const { return g(u); }

    static nonlinearity quadratic();          // G = u^2
    static nonlinearity wb_cubic(double c);   // G = u^2/2 (3c - u), speed bound in
    static nonlinearity power(double r);      // G = |u|^r
};

enum class multiplier_form {
    symbol,             // m
    inverse_shift,      // 1/(c_eff - m)
    symbol_over_shift,  // m/(c_eff - m)
};

// Applies the requested function of m(xi_k) to the spectral coefficients of
// the field and transforms back. Output is real to 1e-12 relative.
std::vector<double> apply_multiplier(const dispersion_symbol& sym, double c,
                                     multiplier_form form, const grid& g,
                                     std::span<const double> field, exec mode = exec::omp);

struct solver_options {
    double tol = 1e-10;
    std::size_t max_iter = 2000;
    double theta = 0.5;        // damped iteration
    double gamma = 0.0;        // 0 -> p/(p-1) from the nonlinearity degree
    std::vector<double> init;  // empty -> A sech^2(x/w) default guess
};

struct solitary_wave {
    grid g;
    std::vector<double> samples;
    double speed;
    double c_eff;
    dispersion_symbol symbol;
    nonlinearity nonlin;
    double residual_sup;
    std::size_t iterations;
    bool converged;
    std::vector<double> s_history;  // Petviashvili stabilization factors
};

// A sech^2(x/w) with A = 3 (c_eff - m(0)) / G''(0) and w = 2/delta_c: matches
// the long-wave limit and the proven tail rate.
std::vector<double> default_initial_guess(const dispersion_symbol& sym, double c,
                                          const nonlinearity& nl, const grid& g);

// Stabilized fixed point u_hat <- S^gamma G(u)_hat / (c_eff - m),
// S = sum (c_eff - m)|u_hat|^2 / sum Re(conj(u_hat) G(u)_hat).
solitary_wave solve_petviashvili(const dispersion_symbol& sym, double c,
                                 const nonlinearity& nl, const grid& g,
                                 const solver_options& opts = {}, exec mode = exec::omp);

// u <- (1-theta) u + theta F^{-1}[G(u)_hat / (c_eff - m)].
solitary_wave solve_damped_fixed_point(const dispersion_symbol& sym, double c,
                                       const nonlinearity& nl, const grid& g,
                                       const solver_options& opts = {},
                                       exec mode = exec::omp);

// sup_j |c_eff u_j - (L u)_j - G(u_j)|, L applied spectrally.
double residual(const solitary_wave& wave, exec mode = exec::omp);
double residual(const dispersion_symbol& sym, double c, const nonlinearity& nl,
                const grid& g, std::span<const double> samples, exec mode = exec::omp);

}  // namespace wavedecay

#endif
