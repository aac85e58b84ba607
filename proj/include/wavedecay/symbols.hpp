#ifndef WAVEDECAY_SYMBOLS_HPP
#define WAVEDECAY_SYMBOLS_HPP

#include <map>
#include <string>

namespace wavedecay {

// tanh(x)/x and tan(y)/y; series branch for |arg| < 1e-4 keeps the removable
// singularity even and C^2 at the origin.
double tanhc(double x);
double tanc(double y);

struct admissibility {
    bool ok;
    double c_eff;           // c^c_power
    double bound;           // sup m (smoothing test) or inf m (differentiating test)
    bool differentiating;
    std::string detail;
};

// A named dispersion relation m with its real-line and imaginary-axis
// restrictions plus the metadata the decay machinery needs. Immutable after
// construction; all evaluations are pure.
class dispersion_symbol {
public:
    static dispersion_symbol whitham();                       // m = sqrt(tanh xi / xi)
    static dispersion_symbol bidirectional_whitham();         // m = tanh xi / xi, c_eff = c^2
    static dispersion_symbol capillary_whitham(double beta);  // m = sqrt((1+beta xi^2) tanh xi / xi)
    static dispersion_symbol kdv_oracle();                    // m = 1 - xi^2
    static dispersion_symbol by_name(const std::string& name,
                                     const std::map<std::string, double>& params = {});

    double eval_real(double xi) const;
    // g(y) = m(iy); requires 0 <= y < strip_height
    double eval_imag(double y) const;
    admissibility admissible(double c) const;
    // m~ = 1/m for strictly positive unbounded symbols; on an inverted symbol
    // restores the base exactly.
    dispersion_symbol invert() const;

    const std::string& name() const { return name_; }
    double m0() const { return m0_; }
    int c_power() const { return c_power_; }
    double strip_height() const { return strip_; }
    double sup_real() const { return sup_; }
    double inf_real() const { return inf_; }
    // true for symbols growing at infinity (capillary), handled via invert()
    bool differentiating() const { return differentiating_; }
    bool inverted() const { return kind_ == kind::capillary_inverted; }
    double beta() const { return beta_; }

private:
    enum class kind { whitham, bidirectional, capillary, capillary_inverted, kdv };

    dispersion_symbol(kind k, double beta);

    kind kind_;
    std::string name_;
    double beta_ = 0.0;
    double m0_ = 0.0;
    int c_power_ = 1;
    double strip_ = 0.0;
    double sup_ = 0.0;
    double inf_ = 0.0;
    bool differentiating_ = false;
};

}  // namespace wavedecay

#endif
