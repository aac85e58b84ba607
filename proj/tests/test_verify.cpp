#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "wavedecay/decay_rate.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/verify.hpp"

using namespace wavedecay;

namespace {

solitary_wave wrap_samples(const grid& g, std::vector<double> u, double c = 1.5) {
    // test-only: package raw samples as a converged wave record
    solitary_wave w{g,   std::move(u), c,    std::pow(c, 1), dispersion_symbol::kdv_oracle(),
                    nonlinearity::quadratic(), 0.0, 0,    true,           {}};
    return w;
}

std::vector<double> sech2(const grid& g, double shift, double scale = 1.0) {
    std::vector<double> u(g.n());
    for (std::size_t j = 0; j < g.n(); ++j) {
        const double s = 1.0 / std::cosh(g.node(j) - shift);
        u[j] = scale * s * s;
    }
    return u;
}

}  // namespace

TEST_CASE("exact even profile: zero asymmetry, crest at the origin") {
    grid g(1 << 12, 40.0);
    const auto w = wrap_samples(g, sech2(g, 0.0));
    const auto v = check_symmetry(w);
    CHECK(v.sup_asymmetry <= 1e-10);
    CHECK(v.crest_location == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v.crest_count == 1);
    CHECK(v.amplitude == doctest::Approx(1.0));
}

TEST_CASE("translated profile: crest located to within a spacing") {
    grid g(1 << 12, 40.0);
    const auto w = wrap_samples(g, sech2(g, 7.0));
    const auto v = check_symmetry(w);
    CHECK(std::fabs(v.crest_location - 7.0) <= g.spacing());
    // crest is off-grid: the asymmetry is limited by the quadratic refinement
    CHECK(v.sup_asymmetry <= 1e-4 * v.amplitude);
    CHECK(v.crest_count == 1);
}

TEST_CASE("crest location and count are scale-invariant") {
    grid g(1 << 12, 40.0);
    const auto u = sech2(g, 3.1);
    const auto v1 = check_symmetry(wrap_samples(g, u));
    auto u2 = u;
    for (auto& x : u2) x *= 123.456;
    const auto v2 = check_symmetry(wrap_samples(g, u2));
    CHECK(v1.crest_location == doctest::Approx(v2.crest_location).epsilon(1e-12));
    CHECK(v1.crest_count == v2.crest_count);
}

TEST_CASE("kdv wave: tail rate within 1% of sqrt(c-1)") {
    grid g(1024, 40.0);
    const auto w = solve_petviashvili(dispersion_symbol::kdv_oracle(), 1.5,
                                      nonlinearity::quadratic(), g);
    const double rate = std::sqrt(0.5);  // sech^2(sqrt(c-1)x/2) ~ 4 e^{-sqrt(c-1)|x|}
    const auto v = fit_solution_decay(w, rate, 8.0, 25.0);
    CHECK(std::fabs(v.delta_hat - rate) <= 0.01 * rate);
    CHECK(v.plateau_value > 0.0);
}

TEST_CASE("whitham wave c=1.1: decay, symmetry, hypotheses") {
    grid g(1 << 14, 120.0);
    const auto w = solve_petviashvili(dispersion_symbol::whitham(), 1.1,
                                      nonlinearity::quadratic(), g);
    const double d = solve_delta(dispersion_symbol::whitham(), 1.1).delta_c;

    const auto dv = fit_solution_decay(w, d, 5.0 / d, 0.8 * g.half_length());
    CHECK(dv.relative_error <= 0.05);

    // plateau is stable when the window shifts right by 5 units
    const auto dv2 = fit_solution_decay(w, d, 5.0 / d + 5.0, 0.8 * g.half_length());
    CHECK(std::fabs(dv2.plateau_value - dv.plateau_value) <= 0.10 * dv.plateau_value);

    const auto sv = check_symmetry(w);
    CHECK(sv.sup_asymmetry <= 1e-6 * sv.amplitude);
    CHECK(sv.crest_count == 1);
    CHECK(sv.g_nonnegative);
    CHECK(sv.g_increasing);
    CHECK(sv.lipschitz_ok);
    CHECK(sv.lipschitz_constant < w.c_eff);
}

TEST_CASE("weighted sup norm: l = 0 is the amplitude") {
    grid g(1024, 40.0);
    const auto w = solve_petviashvili(dispersion_symbol::kdv_oracle(), 1.5,
                                      nonlinearity::quadratic(), g);
    const double amp = *std::max_element(w.samples.begin(), w.samples.end());
    CHECK(weighted_sup_norm(w, 0.0) == doctest::Approx(amp));
}

TEST_CASE("weighted sup norm against a dense scan of the closed form") {
    grid g(1024, 40.0);
    const auto w = solve_petviashvili(dispersion_symbol::kdv_oracle(), 1.5,
                                      nonlinearity::quadratic(), g);
    // brute-force the closed form x^2 (3/4) sech^2(sqrt(0.5) x / 2) at 1e5 points
    double brute = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        const double x = 40.0 * static_cast<double>(i) / 100000.0;
        const double s = 1.0 / std::cosh(0.5 * std::sqrt(0.5) * x);
        brute = std::max(brute, x * x * 0.75 * s * s);
    }
    CHECK(weighted_sup_norm(w, 2.0) == doctest::Approx(brute).epsilon(1e-3));  // grid-sampled max
}

TEST_CASE("weighted norms grow with l and are stable under doubling X") {
    grid g1(1 << 14, 120.0);
    grid g2(1 << 15, 240.0);
    const auto w1 = solve_petviashvili(dispersion_symbol::whitham(), 1.1,
                                       nonlinearity::quadratic(), g1);
    const auto w2 = solve_petviashvili(dispersion_symbol::whitham(), 1.1,
                                       nonlinearity::quadratic(), g2);
    double prev = 0.0;
    for (double l : {1.0, 2.0, 4.0, 6.0, 8.0}) {
        const double n1 = weighted_sup_norm(w1, l);
        const double n2 = weighted_sup_norm(w2, l);
        CHECK(n1 > prev);
        CHECK(std::fabs(n2 - n1) < 0.01 * n1);
        prev = n1;
    }
    const double d = solve_delta(dispersion_symbol::whitham(), 1.1).delta_c;
    const double l1 = weighted_exp_l1(w1, 0.9 * d);
    const double l2 = weighted_exp_l1(w2, 0.9 * d);
    CHECK(std::isfinite(l1));
    CHECK(std::fabs(l2 - l1) < 0.01 * l1);
}

TEST_CASE("decay fit guards") {
    grid g(1024, 40.0);
    const auto w = solve_petviashvili(dispersion_symbol::kdv_oracle(), 1.5,
                                      nonlinearity::quadratic(), g);
    CHECK_THROWS_AS(fit_solution_decay(w, 0.7, 8.0, 39.0), fit_error);  // > 0.8 X

    // a faster-decaying wave reaches the tail floor inside 0.8 X
    const auto w3 = solve_petviashvili(dispersion_symbol::kdv_oracle(), 3.0,
                                       nonlinearity::quadratic(), g);
    CHECK_THROWS_AS(fit_solution_decay(w3, std::sqrt(2.0), 26.0, 31.0), fit_error);
}
