#include "wavedecay/decay_rate.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wavedecay/errors.hpp"

namespace wavedecay {

decay_rate_result solve_delta(const dispersion_symbol& sym, double c) {
    if (sym.differentiating())
        throw std::invalid_argument(
            "solve_delta: pass invert(sym) and 1/c for a differentiating symbol");

    const double c_eff = std::pow(c, sym.c_power());
    const double g0 = sym.eval_imag(0.0);  // = m(0)
    if (!(c_eff > g0)) {
        std::ostringstream os;
        os << sym.name() << ": c_eff = " << c_eff << " <= m(0) = " << g0
           << ", no decay-rate root in the strip";
        throw not_supercritical(os.str());
    }

    double lo = 1e-12;
    double hi;
    if (std::isfinite(sym.strip_height())) {
        hi = sym.strip_height() * (1.0 - 1e-9);
        if (!(sym.eval_imag(hi) >= c_eff)) {
            std::ostringstream os;
            os << sym.name() << ": g(" << hi << ") < c_eff = " << c_eff
               << ", root not bracketed below the strip edge";
            throw bracket_error(os.str());
        }
    } else {
        // unbounded strip (kdv-oracle): grow the bracket geometrically
        hi = 1.0;
        while (sym.eval_imag(hi) < c_eff) {
            hi *= 2.0;
            if (hi > 1e154) throw bracket_error(sym.name() + ": bracket expansion failed");
        }
    }

    std::size_t iterations = 0;
    const double bracket_lo = lo;
    const double bracket_hi = hi;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        if (sym.eval_imag(mid) < c_eff)
            lo = mid;
        else
            hi = mid;
        ++iterations;
        if (iterations > 200) break;
    }

    double delta = 0.5 * (lo + hi);
    // one Newton polish step inside the final bracket
    const double fd = 1e-6 * delta;
    const double gp = (sym.eval_imag(delta + fd) - sym.eval_imag(delta - fd)) / (2.0 * fd);
    if (gp > 0.0) {
        const double step = (sym.eval_imag(delta) - c_eff) / gp;
        const double polished = delta - step;
        if (polished > bracket_lo && polished < bracket_hi) delta = polished;
        ++iterations;
    }

    decay_rate_result r;
    r.delta_c = delta;
    r.iterations = iterations;
    r.bracket_lo = bracket_lo;
    r.bracket_hi = bracket_hi;
    r.residual = std::fabs(sym.eval_imag(delta) - c_eff);
    return r;
}

}  // namespace wavedecay
