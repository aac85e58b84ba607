#include "wavedecay/symbols.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "wavedecay/errors.hpp"

namespace wavedecay {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();
// beta gate: the imaginary-axis bijection for the inverted capillary symbol
// needs beta > 4/pi^2 (fixed constant, see capillary_whitham()).
constexpr double kMinCapillaryBeta = 0.405284734569351086;

}  // namespace

double tanhc(double x) {
    const double a = std::fabs(x);
    if (a < 1e-4) {
        const double x2 = a * a;
        return 1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0;
    }
    return std::tanh(a) / a;
}

double tanc(double y) {
    const double a = std::fabs(y);
    if (a < 1e-4) {
        const double y2 = a * a;
        return 1.0 + y2 / 3.0 + 2.0 * y2 * y2 / 15.0;
    }
    return std::tan(a) / a;
}

dispersion_symbol::dispersion_symbol(kind k, double beta) : kind_(k), beta_(beta) {
    switch (k) {
        case kind::whitham:
            name_ = "whitham";
            m0_ = -0.5;
            c_power_ = 1;
            strip_ = kPi / 2.0;
            sup_ = 1.0;
            inf_ = 0.0;
            break;
        case kind::bidirectional:
            name_ = "bidirectional-whitham";
            m0_ = -1.0;
            c_power_ = 2;
            strip_ = kPi / 2.0;
            sup_ = 1.0;
            inf_ = 0.0;
            break;
        case kind::capillary:
            name_ = "capillary-whitham";
            m0_ = 0.5;
            c_power_ = 1;
            strip_ = std::min(kPi / 2.0, 1.0 / std::sqrt(beta));
            sup_ = kInf;
            differentiating_ = true;
            // beta > 4/pi^2 > 1/3 puts the minimum of m at xi = 0; confirmed
            // by a scan at construction.
            inf_ = 1.0;
            for (int i = 1; i <= 4000; ++i) {
                const double v = eval_real(i * 0.01);
                if (v < inf_) inf_ = v;
            }
            break;
        case kind::capillary_inverted:
            name_ = "capillary-whitham-inverted";
            m0_ = -0.5;
            c_power_ = 1;
            strip_ = std::min(kPi / 2.0, 1.0 / std::sqrt(beta));
            inf_ = 0.0;
            // sup m~ = 1 / inf m
            sup_ = 1.0;
            break;
        case kind::kdv:
            name_ = "kdv-oracle";
            m0_ = 2.0;  // growth order; the oracle symbol does not decay at infinity
            c_power_ = 1;
            strip_ = kInf;
            sup_ = 1.0;
            inf_ = -kInf;
            break;
    }
}

dispersion_symbol dispersion_symbol::whitham() {
    return {kind::whitham, 0.0};
}

dispersion_symbol dispersion_symbol::bidirectional_whitham() {
    return {kind::bidirectional, 0.0};
}

dispersion_symbol dispersion_symbol::capillary_whitham(double beta) {
    if (!(beta > 0.0))
        throw config_error("capillary-whitham: bond number beta must be > 0");
    if (!(beta > kMinCapillaryBeta)) {
        std::ostringstream os;
        os << "capillary-whitham: beta = " << beta << " <= 4/pi^2 = " << kMinCapillaryBeta
           << " is unsupported (decay-rate root leaves the imaginary axis)";
        throw config_error(os.str());
    }
    return {kind::capillary, beta};
}

dispersion_symbol dispersion_symbol::kdv_oracle() {
    return {kind::kdv, 0.0};
}

dispersion_symbol dispersion_symbol::by_name(const std::string& name,
                                             const std::map<std::string, double>& params) {
    if (name == "whitham") return whitham();
    if (name == "bidirectional-whitham") return bidirectional_whitham();
    if (name == "kdv-oracle") return kdv_oracle();
    if (name == "capillary-whitham") {
        const auto it = params.find("beta");
        if (it == params.end())
            throw config_error("capillary-whitham: parameter beta is required");
        return capillary_whitham(it->second);
    }
    throw config_error("unknown symbol '" + name + "'");
}

double dispersion_symbol::eval_real(double xi) const {
    const double a = std::fabs(xi);  // all built-in symbols are even
    switch (kind_) {
        case kind::whitham:
            return std::sqrt(tanhc(a));
        case kind::bidirectional:
            return tanhc(a);
        case kind::capillary:
            return std::sqrt((1.0 + beta_ * a * a) * tanhc(a));
        case kind::capillary_inverted:
            return 1.0 / std::sqrt((1.0 + beta_ * a * a) * tanhc(a));
        case kind::kdv:
            return 1.0 - a * a;
    }
    return 0.0;
}

double dispersion_symbol::eval_imag(double y) const {
    if (y < 0.0 || !(y < strip_)) {
        std::ostringstream os;
        os << name_ << ": y = " << y << " outside the analyticity strip [0, " << strip_ << ")";
        throw domain_error(os.str());
    }
    switch (kind_) {
        case kind::whitham:
            return std::sqrt(tanc(y));
        case kind::bidirectional:
            return tanc(y);
        case kind::capillary:
            return std::sqrt((1.0 - beta_ * y * y) * tanc(y));
        case kind::capillary_inverted:
            return 1.0 / std::sqrt((1.0 - beta_ * y * y) * tanc(y));
        case kind::kdv:
            return 1.0 + y * y;
    }
    return 0.0;
}

admissibility dispersion_symbol::admissible(double c) const {
    admissibility a;
    a.differentiating = differentiating_;
    a.c_eff = std::pow(c, c_power_);
    std::ostringstream os;
    if (!(c > 0.0)) {
        a.ok = false;
        a.bound = differentiating_ ? inf_ : sup_;
        a.detail = "speed must be positive";
        return a;
    }
    if (differentiating_) {
        // 0 < c < inf m
        a.bound = inf_;
        a.ok = c < inf_;
        if (a.ok)
            os << "0 < c = " << c << " < inf m = " << inf_;
        else
            os << "c = " << c << " >= inf m = " << inf_;
    } else {
        // c_eff > sup m
        a.bound = sup_;
        a.ok = a.c_eff > sup_;
        if (a.ok)
            os << "c_eff = " << a.c_eff << " > sup m = " << sup_;
        else
            os << "c_eff = " << a.c_eff << " <= sup m = " << sup_;
    }
    a.detail = os.str();
    return a;
}

dispersion_symbol dispersion_symbol::invert() const {
    switch (kind_) {
        case kind::capillary:
            return {kind::capillary_inverted, beta_};
        case kind::capillary_inverted:
            return {kind::capillary, beta_};  // exact round trip
        case kind::whitham:
        case kind::bidirectional:
            throw inversion_error(name_ + ": symbol is bounded, not a differentiating operator");
        case kind::kdv:
            throw inversion_error("kdv-oracle: symbol is not strictly positive");
    }
    throw inversion_error("unreachable");
}

}  // namespace wavedecay
