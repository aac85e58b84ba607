#include "wavedecay/wave_solver.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "wavedecay/decay_rate.hpp"
#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

std::vector<double> multiplier_table(const dispersion_symbol& sym, double c,
                                     multiplier_form form, const grid& g, exec mode) {
    const double c_eff = std::pow(c, sym.c_power());
    const std::size_t n = g.n();
    std::vector<double> phi(n);
    par::for_each(n, mode, [&](std::size_t k) {
        const double m = sym.eval_real(g.wavenumber(k));
        switch (form) {
            case multiplier_form::symbol:
                phi[k] = m;
                break;
            case multiplier_form::inverse_shift:
                phi[k] = 1.0 / (c_eff - m);
                break;
            case multiplier_form::symbol_over_shift:
                phi[k] = m / (c_eff - m);
                break;
        }
    });
    if (form != multiplier_form::symbol) {
        for (std::size_t k = 0; k < n; ++k) {
            const double denom = c_eff - sym.eval_real(g.wavenumber(k));
            if (std::fabs(denom) <= 1e-14 * std::max(1.0, std::fabs(c_eff))) {
                std::ostringstream os;
                os << sym.name() << ": c_eff - m(" << g.wavenumber(k)
                   << ") vanishes on the grid";
                throw resonance_error(os.str());
            }
        }
    }
    return phi;
}

// diagonal spectral application with the raw DFT pair (scalings cancel)
void apply_table(const fft_plan& plan, const std::vector<double>& phi,
                 std::span<const double> in, std::vector<double>& out, exec mode) {
    const std::size_t n = phi.size();
    std::vector<std::complex<double>> buf(n);
    par::for_each(n, mode, [&](std::size_t j) { buf[j] = in[j]; });
    plan.forward(buf.data(), mode);
    const double ninv = 1.0 / static_cast<double>(n);
    par::for_each(n, mode, [&](std::size_t k) { buf[k] *= phi[k] * ninv; });
    plan.inverse(buf.data(), mode);
    par::for_each(n, mode, [&](std::size_t j) { out[j] = buf[j].real(); });
}

double sup_abs(const std::vector<double>& v, exec mode) {
    return par::max_value(v.size(), mode, [&](std::size_t j) { return std::fabs(v[j]); });
}

}  // namespace

nonlinearity nonlinearity::quadratic() {
    return {"quadratic", 2.0, [](double u) { return u * u; }};
}

nonlinearity nonlinearity::wb_cubic(double c) {
    return {"wb-cubic", 2.0, [c](double u) { return 0.5 * u * u * (3.0 * c - u); }};
}

nonlinearity nonlinearity::power(double r) {
    if (!(r > 1.0)) throw config_error("power nonlinearity: degree r must exceed 1");
    return {"power-r", r, [r](double u) { return std::pow(std::fabs(u), r); }};
}

std::vector<double> apply_multiplier(const dispersion_symbol& sym, double c,
                                     multiplier_form form, const grid& g,
                                     std::span<const double> field, exec mode) {
    const auto phi = multiplier_table(sym, c, form, g, mode);
    fft_plan plan(g.n());
    std::vector<double> out(g.n());
    apply_table(plan, phi, field, out, mode);
    return out;
}

std::vector<double> default_initial_guess(const dispersion_symbol& sym, double c,
                                          const nonlinearity& nl, const grid& g) {
    const double c_eff = std::pow(c, sym.c_power());
    const double m0 = sym.eval_real(0.0);
    const double eps = 1e-4;
    const double gpp = (nl(eps) - 2.0 * nl(0.0) + nl(-eps)) / (eps * eps);
    const double amp = 3.0 * (c_eff - m0) / gpp;
    const double delta = sym.differentiating()
                             ? solve_delta(sym.invert(), 1.0 / c).delta_c
                             : solve_delta(sym, c).delta_c;
    const double w = 2.0 / delta;
    std::vector<double> u(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double s = 1.0 / std::cosh(g.node(j) / w);
        u[j] = amp * s * s;
    }
    return u;
}

solitary_wave solve_petviashvili(const dispersion_symbol& sym, double c,
                                 const nonlinearity& nl, const grid& g,
                                 const solver_options& opts, exec mode) {
    const auto adm = sym.admissible(c);
    if (!adm.ok)
        throw admissibility_error(sym.name() + ": inadmissible speed (" + adm.detail + ")");
    const double c_eff = adm.c_eff;
    const double gamma =
        opts.gamma > 0.0 ? opts.gamma : nl.degree / (nl.degree - 1.0);

    const std::size_t n = g.n();
    fft_plan plan(n);
    std::vector<double> denom(n), msym(n);
    par::for_each(n, mode, [&](std::size_t k) {
        const double m = sym.eval_real(g.wavenumber(k));
        msym[k] = m;
        denom[k] = c_eff - m;
    });

    std::vector<double> u = opts.init.empty() ? default_initial_guess(sym, c, nl, g)
                                              : opts.init;
    if (u.size() != n) throw config_error("solve_petviashvili: init size mismatch");

    std::vector<std::complex<double>> uh(n), gh(n);
    std::vector<double> lu(n), gu(n);
    std::vector<double> s_history;
    std::vector<double> res_history;
    double res = std::numeric_limits<double>::infinity();

    for (std::size_t it = 1; it <= opts.max_iter; ++it) {
        if (sup_abs(u, mode) < 1e-12)
            throw trivial_collapse("solve_petviashvili: iterate collapsed to zero");

        par::for_each(n, mode, [&](std::size_t j) {
            uh[j] = u[j];
            gu[j] = nl(u[j]);
            gh[j] = gu[j];
        });
        plan.forward(uh.data(), mode);
        plan.forward(gh.data(), mode);

        const double num = par::sum(n, mode, [&](std::size_t k) {
            return denom[k] * std::norm(uh[k]);
        });
        const double den = par::sum(n, mode, [&](std::size_t k) {
            return uh[k].real() * gh[k].real() + uh[k].imag() * gh[k].imag();
        });
        if (den == 0.0)
            throw trivial_collapse("solve_petviashvili: stabilization denominator vanished");
        const double s = num / den;
        const double s_gamma = std::pow(s, gamma);
        s_history.push_back(s);

        const double ninv = 1.0 / static_cast<double>(n);
        par::for_each(n, mode, [&](std::size_t k) {
            uh[k] = s_gamma * gh[k] * (ninv / denom[k]);
        });
        // residual needs L u for the new iterate; reuse the spectrum
        par::for_each(n, mode, [&](std::size_t k) { gh[k] = msym[k] * uh[k]; });
        plan.inverse(uh.data(), mode);
        plan.inverse(gh.data(), mode);
        par::for_each(n, mode, [&](std::size_t j) {
            u[j] = uh[j].real();
            lu[j] = gh[j].real();
        });

        res = par::max_value(n, mode, [&](std::size_t j) {
            return std::fabs(c_eff * u[j] - lu[j] - nl(u[j]));
        });
        res_history.push_back(res);
        if (res < opts.tol && std::fabs(s - 1.0) < 1e-10) {
            return {g, std::move(u), c, c_eff, sym, nl, res, it, true, std::move(s_history)};
        }
    }

    std::ostringstream os;
    os << "solve_petviashvili: no convergence after " << opts.max_iter
       << " iterations (residual " << res << ")";
    throw non_convergence(os.str(), std::move(res_history));
}

solitary_wave solve_damped_fixed_point(const dispersion_symbol& sym, double c,
                                       const nonlinearity& nl, const grid& g,
                                       const solver_options& opts, exec mode) {
    if (!(opts.theta > 0.0 && opts.theta <= 1.0))
        throw config_error("solve_damped_fixed_point: damping theta must lie in (0, 1]");
    const auto adm = sym.admissible(c);
    if (!adm.ok)
        throw admissibility_error(sym.name() + ": inadmissible speed (" + adm.detail + ")");
    const double c_eff = adm.c_eff;

    const std::size_t n = g.n();
    fft_plan plan(n);
    std::vector<double> denom(n), msym(n);
    par::for_each(n, mode, [&](std::size_t k) {
        const double m = sym.eval_real(g.wavenumber(k));
        msym[k] = m;
        denom[k] = c_eff - m;
    });

    std::vector<double> u;
    if (!opts.init.empty()) {
        u = opts.init;
    } else {
        // default init: Petviashvili solution of the quadratic truncation
        // G''(0)/2 u^2, falling back to the sech^2 guess
        const double eps = 1e-4;
        const double gpp = (nl(eps) - 2.0 * nl(0.0) + nl(-eps)) / (eps * eps);
        const nonlinearity trunc{"quadratic-truncation", 2.0,
                                 [a = 0.5 * gpp](double v) { return a * v * v; }};
        try {
            solver_options po;
            po.tol = opts.tol;
            po.max_iter = opts.max_iter;
            u = solve_petviashvili(sym, c, trunc, g, po, mode).samples;
        } catch (const error&) {
            u = default_initial_guess(sym, c, nl, g);
        }
    }
    if (u.size() != n) throw config_error("solve_damped_fixed_point: init size mismatch");
    const double init_sup = sup_abs(u, mode);

    std::vector<std::complex<double>> buf(n);
    std::vector<double> lu(n);
    std::vector<double> res_history;
    const double theta = opts.theta;
    double res = std::numeric_limits<double>::infinity();

    for (std::size_t it = 1; it <= opts.max_iter; ++it) {
        par::for_each(n, mode, [&](std::size_t j) { buf[j] = nl(u[j]); });
        plan.forward(buf.data(), mode);
        const double ninv = 1.0 / static_cast<double>(n);
        par::for_each(n, mode, [&](std::size_t k) { buf[k] *= ninv / denom[k]; });
        plan.inverse(buf.data(), mode);
        par::for_each(n, mode, [&](std::size_t j) {
            u[j] = (1.0 - theta) * u[j] + theta * buf[j].real();
        });

        const double sup = sup_abs(u, mode);
        if (sup > 1e3 * init_sup) {
            std::ostringstream os;
            os << "solve_damped_fixed_point: iterate diverged (sup " << sup << " from "
               << init_sup << ")";
            throw divergence_error(os.str());
        }
        if (sup < 1e-12)
            throw trivial_collapse("solve_damped_fixed_point: iterate collapsed to zero");

        par::for_each(n, mode, [&](std::size_t j) { buf[j] = u[j]; });
        plan.forward(buf.data(), mode);
        par::for_each(n, mode, [&](std::size_t k) { buf[k] *= msym[k] * ninv; });
        plan.inverse(buf.data(), mode);
        res = par::max_value(n, mode, [&](std::size_t j) {
            return std::fabs(c_eff * u[j] - buf[j].real() - nl(u[j]));
        });
        res_history.push_back(res);
        if (res < opts.tol) {
            // the zero solution satisfies the equation exactly; reaching it
            // is a collapse, not a solve
            if (sup < 1e-8 * init_sup)
                throw trivial_collapse(
                    "solve_damped_fixed_point: converged to the trivial zero solution");
            return {g, std::move(u), c, c_eff, sym, nl, res, it, true, {}};
        }
    }

    std::ostringstream os;
    os << "solve_damped_fixed_point: no convergence after " << opts.max_iter
       << " iterations (residual " << res << ")";
    throw non_convergence(os.str(), std::move(res_history));
}

double residual(const dispersion_symbol& sym, double c, const nonlinearity& nl,
                const grid& g, std::span<const double> samples, exec mode) {
    const double c_eff = std::pow(c, sym.c_power());
    const auto lu = apply_multiplier(sym, c, multiplier_form::symbol, g, samples, mode);
    return par::max_value(g.n(), mode, [&](std::size_t j) {
        return std::fabs(c_eff * samples[j] - lu[j] - nl(samples[j]));
    });
}

double residual(const solitary_wave& wave, exec mode) {
    return residual(wave.symbol, wave.speed, wave.nonlin, wave.g, wave.samples, mode);
}

}  // namespace wavedecay
