#include "wavedecay/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <sstream>

#include "wavedecay/decay_rate.hpp"
#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

constexpr double kSqrt2Pi = 2.50662827463100050240;

struct line_fit {
    double slope;
    double intercept;
    double r2;
    double max_dev;
};

line_fit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / static_cast<double>(n);
    const double my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    line_fit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0, dev = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss_res += r * r;
        dev = std::max(dev, std::fabs(r));
    }
    f.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    f.max_dev = dev;
    return f;
}

}  // namespace

kernel_samples compute_kernel(const dispersion_symbol& sym, double c, const grid& g,
                              exec mode) {
    const auto adm = sym.admissible(c);
    if (!adm.ok)
        throw admissibility_error(sym.name() + ": inadmissible speed (" + adm.detail + ")");

    const double c_eff = adm.c_eff;
    const std::size_t n = g.n();
    fft_plan plan(n);

    // spectral samples (-1)^k m/(c_eff - m) at the grid wavenumbers; the
    // parity factor accounts for the node offset x_0 = -X, and the final
    // dxi/sqrt(2 pi) scaling maps the unnormalized DFT sum onto the unitary
    // continuum transform (dxi * h * n = 2 pi).
    std::vector<std::complex<double>> buf(n);
    par::for_each(n, mode, [&](std::size_t k) {
        const double m = sym.eval_real(g.wavenumber(k));
        buf[k] = g.parity(k) * m / (c_eff - m);
    });
    plan.inverse(buf.data(), mode);

    const double scale = g.dxi() / kSqrt2Pi;
    const double max_re = par::max_value(n, mode, [&](std::size_t j) {
        return std::fabs(buf[j].real());
    });
    const double max_im = par::max_value(n, mode, [&](std::size_t j) {
        return std::fabs(buf[j].imag());
    });
    if (max_im > 1e-12 * max_re) {
        std::ostringstream os;
        os << "compute_kernel: imaginary residue " << max_im / max_re << " exceeds 1e-12";
        throw error(os.str());
    }

    kernel_samples out{g, std::vector<double>(n), sym, c, c_eff};
    par::for_each(n, mode, [&](std::size_t j) { out.values[j] = scale * buf[j].real(); });
    return out;
}

double trapezoid_integral(const kernel_samples& k, exec mode) {
    return k.g.spacing() *
           par::sum(k.values.size(), mode, [&](std::size_t j) { return k.values[j]; });
}

double wrap_error_bound(double delta_c, const grid& g) {
    return std::exp(-delta_c * g.half_length());
}

origin_fit_report near_origin_exponent(const kernel_samples& k, double x_lo, double x_hi) {
    if (!(0.0 < x_lo && x_lo < x_hi && x_hi <= 0.5))
        throw fit_error("near_origin_exponent: window must satisfy 0 < x_lo < x_hi <= 0.5");

    std::vector<double> lx, llx, ly;
    const std::size_t n = k.g.n();
    for (std::size_t j = 0; j < n; ++j) {
        const double x = k.g.node(j);
        if (x < x_lo || x > x_hi) continue;
        const double v = std::fabs(k.values[j]);
        if (v <= 0.0) continue;
        lx.push_back(std::log(x));
        llx.push_back(std::log(std::fabs(std::log(x))));
        ly.push_back(std::log(v));
    }
    if (lx.size() < 8) {
        std::ostringstream os;
        os << "near_origin_exponent: only " << lx.size() << " usable nodes in (" << x_lo
           << ", " << x_hi << "), need 8";
        throw fit_error(os.str());
    }
    const line_fit p = fit_line(lx, ly);
    const line_fit l = fit_line(llx, ly);

    origin_fit_report r;
    r.model = p.r2 >= l.r2 ? origin_fit_report::model_kind::power
                           : origin_fit_report::model_kind::log;
    r.exponent = p.slope;
    r.log_slope = l.slope;
    r.r2_power = p.r2;
    r.r2_log = l.r2;
    r.nodes = lx.size();
    r.x_lo = x_lo;
    r.x_hi = x_hi;
    return r;
}

tail_fit_report tail_decay_fit(const kernel_samples& k, double x_lo, double x_hi) {
    if (!(0.0 < x_lo && x_lo < x_hi))
        throw fit_error("tail_decay_fit: invalid window");
    if (x_hi > 0.8 * k.g.half_length()) {
        std::ostringstream os;
        os << "tail_decay_fit: x_hi = " << x_hi << " > 0.8 X = " << 0.8 * k.g.half_length()
           << " (periodic wrap contamination)";
        throw fit_error(os.str());
    }

    const double floor = 100.0 * std::numeric_limits<double>::epsilon();
    std::vector<double> xs, ys;
    double min_abs = std::numeric_limits<double>::infinity();
    const std::size_t n = k.g.n();
    for (std::size_t j = 0; j < n; ++j) {
        const double x = k.g.node(j);
        if (x < x_lo || x > x_hi) continue;
        const double v = std::fabs(k.values[j]);
        min_abs = std::min(min_abs, v);
        if (v <= floor) continue;
        xs.push_back(x);
        ys.push_back(std::log(v));
    }
    if (min_abs <= floor) {
        std::ostringstream os;
        os << "tail_decay_fit: window touches the noise floor (min |H| = " << min_abs
           << " <= " << floor << ")";
        throw fit_error(os.str(), min_abs);
    }
    if (xs.size() < 8)
        throw fit_error("tail_decay_fit: fewer than 8 nodes in the window");

    const line_fit f = fit_line(xs, ys);
    tail_fit_report r;
    r.delta_hat = -f.slope;
    r.prefactor_hat = std::exp(f.intercept);
    r.residual = f.max_dev;
    r.nodes = xs.size();
    r.x_lo = x_lo;
    r.x_hi = x_hi;
    return r;
}

double analytic_prefactor(const dispersion_symbol& sym, double c, double delta_c) {
    const double c_eff = std::pow(c, sym.c_power());
    const double h = 1e-6 * delta_c;
    const auto deriv = [&](double step) {
        return (sym.eval_imag(delta_c + step) - sym.eval_imag(delta_c - step)) / (2.0 * step);
    };
    const double d1 = deriv(h);
    const double d2 = deriv(h / 2.0);
    const double gp = (4.0 * d2 - d1) / 3.0;  // Richardson
    if (std::fabs(gp) < 1e-8) {
        std::ostringstream os;
        os << sym.name() << ": g'(" << delta_c << ") = " << gp
           << " below 1e-8; decay model would need poly_order > 0";
        throw degenerate_error(os.str());
    }
    const double pref = kSqrt2Pi * c_eff / gp;

    // closed forms for the two tanh-based smoothing symbols
    const double t = std::tan(delta_c);
    const double s2 = 1.0 / (std::cos(delta_c) * std::cos(delta_c));
    double closed = 0.0;
    bool have_closed = false;
    if (sym.name() == "whitham") {
        closed = kSqrt2Pi * 2.0 * t * delta_c / (delta_c * s2 - t);
        have_closed = true;
    } else if (sym.name() == "bidirectional-whitham") {
        closed = kSqrt2Pi * t * delta_c / (delta_c * s2 - t);
        have_closed = true;
    }
    if (have_closed && std::fabs(pref - closed) > 1e-8 * std::fabs(closed)) {
        std::ostringstream os;
        os << sym.name() << ": finite-difference prefactor " << pref
           << " disagrees with the closed form " << closed;
        throw std::logic_error(os.str());
    }
    return pref;
}

kernel_decay_model fit_decay_model(const kernel_samples& k, double x_lo, double x_hi) {
    const auto dr = solve_delta(k.symbol, k.speed);
    const double pref = analytic_prefactor(k.symbol, k.speed, dr.delta_c);
    const auto tail = tail_decay_fit(k, x_lo, x_hi);
    kernel_decay_model m;
    m.delta_c = dr.delta_c;
    m.prefactor = pref;
    m.poly_order = 0;  // analytic_prefactor verified g'(delta_c) != 0
    m.fit_window_lo = x_lo;
    m.fit_window_hi = x_hi;
    m.fit_residual = tail.residual;
    return m;
}

std::pair<double, double> default_origin_window(const grid& g) {
    return {4.0 * g.spacing(), 0.2};
}

std::pair<double, double> default_tail_window(const grid& g, double delta_c) {
    return {std::max(10.0, 5.0 / delta_c), 0.5 * g.half_length()};
}

}  // namespace wavedecay
