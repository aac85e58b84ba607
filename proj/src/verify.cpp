#include "wavedecay/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <vector>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

struct line_fit {
    double slope;
    double intercept;
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
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return {sxy / sxx, my - sxy / sxx * mx};
}

}  // namespace

double crest_location(const grid& g, std::span<const double> samples) {
    const std::size_t n = g.n();
    std::size_t jmax = 0;
    for (std::size_t j = 1; j < n; ++j)
        if (samples[j] > samples[jmax]) jmax = j;  // leftmost on ties

    // quadratic refinement through the three nodes around the discrete max
    const double um = samples[(jmax + n - 1) % n];
    const double u0 = samples[jmax];
    const double up = samples[(jmax + 1) % n];
    const double curv = um - 2.0 * u0 + up;
    double off = 0.0;
    if (curv < 0.0) off = 0.5 * g.spacing() * (um - up) / curv;
    return g.node(jmax) + off;
}

decay_verdict fit_solution_decay(const solitary_wave& wave, double delta_c_reference,
                                 double window_lo, double window_hi) {
    const grid& g = wave.g;
    if (!(window_lo > 0.0 && window_lo < window_hi))
        throw fit_error("fit_solution_decay: invalid window");
    if (window_hi > 0.8 * g.half_length())
        throw fit_error("fit_solution_decay: window exceeds 0.8 X");

    const double lam0 = crest_location(g, wave.samples);
    const double amp = *std::max_element(wave.samples.begin(), wave.samples.end());
    const double floor = solution_tail_floor * std::fabs(amp);

    std::vector<double> rs, ly, weighted;
    double min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double r = std::fabs(g.node(j) - lam0);
        if (r < window_lo || r > window_hi) continue;
        const double v = std::fabs(wave.samples[j]);
        min_abs = std::min(min_abs, v);
        if (v <= floor) continue;
        rs.push_back(r);
        ly.push_back(std::log(v));
        weighted.push_back(std::exp(delta_c_reference * r) * v);
    }
    if (rs.size() < 8) {
        std::ostringstream os;
        os << "fit_solution_decay: window is in the noise floor (min |u| = " << min_abs
           << ", floor = " << floor << ")";
        throw fit_error(os.str(), min_abs);
    }

    const line_fit f = fit_line(rs, ly);
    std::nth_element(weighted.begin(), weighted.begin() + weighted.size() / 2,
                     weighted.end());
    decay_verdict v;
    v.delta_hat = -f.slope;
    v.delta_c_reference = delta_c_reference;
    v.relative_error = std::fabs(v.delta_hat - delta_c_reference) / delta_c_reference;
    v.plateau_value = weighted[weighted.size() / 2];
    v.window_lo = window_lo;
    v.window_hi = window_hi;
    v.nodes = rs.size();
    return v;
}

double weighted_sup_norm(const solitary_wave& wave, double l) {
    const grid& g = wave.g;
    const double lam0 = crest_location(g, wave.samples);
    double m = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double r = std::fabs(g.node(j) - lam0);
        const double v = std::pow(r, l) * std::fabs(wave.samples[j]);
        if (v > m) m = v;
    }
    return m;
}

double weighted_exp_l1(const solitary_wave& wave, double delta) {
    const grid& g = wave.g;
    const double lam0 = crest_location(g, wave.samples);
    const double amp = *std::max_element(wave.samples.begin(), wave.samples.end());
    const double floor = solution_tail_floor * std::fabs(amp);
    double s = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double v = std::fabs(wave.samples[j]);
        if (v <= floor) continue;
        s += std::exp(delta * std::fabs(g.node(j) - lam0)) * v;
    }
    return g.spacing() * s;
}

symmetry_verdict check_symmetry(const solitary_wave& wave, double tol) {
    (void)tol;
    const grid& g = wave.g;
    const std::size_t n = g.n();
    const auto& u = wave.samples;

    symmetry_verdict v;
    v.crest_location = crest_location(g, u);
    v.amplitude = *std::max_element(u.begin(), u.end());

    // reflection about the crest by trigonometric interpolation: with
    // U_k = DFT(u), the samples of u(2 lam0 - x) are the forward DFT of
    // U_k e^{2 i xi_k (lam0 + X)} divided by n.
    fft_plan plan(n);
    std::vector<std::complex<double>> buf(n);
    for (std::size_t j = 0; j < n; ++j) buf[j] = u[j];
    plan.forward(buf.data());
    const double tau = v.crest_location + g.half_length();  // offset from x_0 = -X
    for (std::size_t k = 0; k < n; ++k) {
        const double phase = 2.0 * g.wavenumber(k) * tau;
        buf[k] *= std::complex<double>(std::cos(phase), std::sin(phase));
    }
    plan.forward(buf.data());
    double asym = 0.0;
    const double ninv = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double refl = buf[j].real() * ninv;
        asym = std::max(asym, std::fabs(u[j] - refl));
    }
    v.sup_asymmetry = asym;

    // strict local maxima above 1e-6 * amplitude
    std::size_t crests = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double prev = u[(j + n - 1) % n];
        const double next = u[(j + 1) % n];
        if (u[j] > prev && u[j] > next && u[j] > 1e-6 * v.amplitude) ++crests;
    }
    v.crest_count = crests;

    // hypotheses sampled on [min u, max u]
    const double lo = *std::min_element(u.begin(), u.end());
    const double hi = v.amplitude;
    const std::size_t ns = 10000;
    const double du = (hi - lo) / static_cast<double>(ns);
    double gmin = std::numeric_limits<double>::infinity();
    double qmin = std::numeric_limits<double>::infinity();
    double qmax = -std::numeric_limits<double>::infinity();
    double prev_g = wave.nonlin(lo);
    gmin = std::min(gmin, prev_g);
    for (std::size_t i = 1; i <= ns; ++i) {
        const double s = lo + du * static_cast<double>(i);
        const double gs = wave.nonlin(s);
        gmin = std::min(gmin, gs);
        const double q = (gs - prev_g) / du;
        qmin = std::min(qmin, q);
        qmax = std::max(qmax, q);
        prev_g = gs;
    }
    const double qscale = std::max(std::fabs(qmax), std::fabs(qmin));
    v.g_nonnegative = gmin >= -1e-12 * std::max(1.0, std::fabs(wave.nonlin(hi)));
    v.g_increasing = qmin >= -1e-9 * std::max(1.0, qscale);
    v.lipschitz_constant = std::max(std::fabs(qmax), std::fabs(qmin));
    v.lipschitz_ok = v.lipschitz_constant < wave.c_eff;
    return v;
}

}  // namespace wavedecay
