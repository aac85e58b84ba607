#include <doctest.h>

#include <cmath>

#include "wavedecay/decay_rate.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/kernel.hpp"

using namespace wavedecay;

namespace {
const double kSqrt2Pi = 2.50662827463100050240;
const double kPi = 3.14159265358979323846;
}

TEST_CASE("zero-frequency identity: trapezoid integral of H_c") {
    // whitham c=1.2: m(0)/(c - m(0)) = 5
    grid g(1 << 14, 80.0);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    CHECK(trapezoid_integral(k) == doctest::Approx(5.0 * kSqrt2Pi).epsilon(1e-6));

    // all built-ins, three speeds each (modest grid keeps this fast)
    struct case_t {
        dispersion_symbol sym;
        double c;
    };
    const case_t cases[] = {
        {dispersion_symbol::whitham(), 1.1},
        {dispersion_symbol::whitham(), 1.2},
        {dispersion_symbol::whitham(), 1.5},
        {dispersion_symbol::bidirectional_whitham(), 1.05},
        {dispersion_symbol::bidirectional_whitham(), 1.2},
        {dispersion_symbol::bidirectional_whitham(), 1.5},
        {dispersion_symbol::capillary_whitham(0.5).invert(), 1.0 / 0.9},
        {dispersion_symbol::capillary_whitham(0.5).invert(), 1.0 / 0.8},
        {dispersion_symbol::capillary_whitham(0.5).invert(), 1.0 / 0.5},
        {dispersion_symbol::kdv_oracle(), 1.5},
        {dispersion_symbol::kdv_oracle(), 2.0},
        {dispersion_symbol::kdv_oracle(), 1.2},
    };
    grid g2(1 << 13, 60.0);
    for (const auto& tc : cases) {
        const auto ks = compute_kernel(tc.sym, tc.c, g2);
        const double m0 = tc.sym.eval_real(0.0);
        const double target = kSqrt2Pi * m0 / (ks.c_eff - m0);
        CHECK(trapezoid_integral(ks) == doctest::Approx(target).epsilon(1e-6));
    }
}

TEST_CASE("inadmissible speed raises") {
    grid g(256, 40.0);
    CHECK_THROWS_AS(compute_kernel(dispersion_symbol::whitham(), 0.9, g),
                    admissibility_error);
}

TEST_CASE("kernel is even on the grid") {
    grid g(1 << 13, 60.0);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    double amax = 0.0;
    for (double v : k.values) amax = std::max(amax, std::fabs(v));
    for (std::size_t j = 1; j < g.n(); ++j)
        CHECK(std::fabs(k.values[j] - k.values[g.mirror(j)]) <= 1e-12 * amax);
}

TEST_CASE("tail fit recovers delta_c and the residue prefactor (whitham c=1.2)") {
    grid g(1 << 14, 80.0);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    const auto dr = solve_delta(dispersion_symbol::whitham(), 1.2);
    const auto tf = tail_decay_fit(k, 8.0, 14.0);
    CHECK(std::fabs(tf.delta_hat - dr.delta_c) <= 0.02 * dr.delta_c);
    const double pref = analytic_prefactor(dispersion_symbol::whitham(), 1.2, dr.delta_c);
    CHECK(std::fabs(tf.prefactor_hat - pref) <= 0.05 * pref);
    CHECK(tf.residual < 0.1);
}

TEST_CASE("doubling X at fixed h moves delta_hat by < 0.5%") {
    const auto sym = dispersion_symbol::whitham();
    grid g1(1 << 13, 40.0);
    grid g2(1 << 14, 80.0);
    const auto t1 = tail_decay_fit(compute_kernel(sym, 1.2, g1), 8.0, 14.0);
    const auto t2 = tail_decay_fit(compute_kernel(sym, 1.2, g2), 8.0, 14.0);
    CHECK(std::fabs(t1.delta_hat - t2.delta_hat) < 0.005 * t2.delta_hat);
}

TEST_CASE("tail fit guards") {
    grid g(1 << 13, 40.0);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    CHECK_THROWS_AS(tail_decay_fit(k, 10.0, 39.0), fit_error);   // > 0.8 X
    CHECK_THROWS_AS(tail_decay_fit(k, 10.0, 10.001), fit_error); // too few nodes

    // synthetic tail at the machine floor triggers the floor guard
    kernel_samples fake{g, std::vector<double>(g.n(), 1e-15), k.symbol, k.speed, k.c_eff};
    try {
        tail_decay_fit(fake, 8.0, 14.0);
        CHECK(false);
    } catch (const fit_error& e) {
        CHECK(e.measured_floor == doctest::Approx(1e-15));
    }
}

TEST_CASE("analytic prefactor agrees with the closed forms at pi/4") {
    const double c_w = 2.0 / std::sqrt(kPi);
    const double d = kPi / 4.0;
    // whitham: sqrt(2 pi) 2 tan(d) d / (d sec^2 d - tan d), tan = 1, sec^2 = 2
    const double whitham_expect = kSqrt2Pi * 2.0 * d / (2.0 * d - 1.0);
    CHECK(analytic_prefactor(dispersion_symbol::whitham(), c_w, d) ==
          doctest::Approx(whitham_expect).epsilon(1e-8));
    // bidirectional: same with the factor-1 numerator
    const double bidir_expect = kSqrt2Pi * d / (2.0 * d - 1.0);
    CHECK(analytic_prefactor(dispersion_symbol::bidirectional_whitham(), c_w, d) ==
          doctest::Approx(bidir_expect).epsilon(1e-8));
}

TEST_CASE("finite-difference derivative of tan(y)/y matches the closed form") {
    // g(y) = tan y / y, g'(y) = (y sec^2 y - tan y)/y^2 at y = pi/4
    const auto b = dispersion_symbol::bidirectional_whitham();
    const double d = kPi / 4.0;
    const double h = 1e-6 * d;
    const double fd1 = (b.eval_imag(d + h) - b.eval_imag(d - h)) / (2.0 * h);
    const double fd2 = (b.eval_imag(d + h / 2) - b.eval_imag(d - h / 2)) / h;
    const double fd = (4.0 * fd2 - fd1) / 3.0;
    const double closed = (d * 2.0 - 1.0) / (d * d);  // sec^2(pi/4) = 2, tan = 1
    CHECK(std::fabs(fd - closed) <= 1e-8 * std::fabs(closed));
}

TEST_CASE("near-origin law: whitham power exponent on a deep window") {
    grid g(1 << 22, 2.5);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    const auto r = near_origin_exponent(k, 2.5e-6, 2.5e-5);
    CHECK(r.model == origin_fit_report::model_kind::power);
    CHECK(r.exponent > -0.55);
    CHECK(r.exponent < -0.45);
    CHECK(r.r2_power > r.r2_log);
}

TEST_CASE("near-origin law: bidirectional prefers the log model") {
    grid g(1 << 14, 80.0);
    const auto k = compute_kernel(dispersion_symbol::bidirectional_whitham(), 1.2, g);
    const auto r = near_origin_exponent(k, 0.01, 0.2);
    CHECK(r.model == origin_fit_report::model_kind::log);
    CHECK(r.r2_log > r.r2_power);
}

TEST_CASE("near-origin law: inverted capillary, exponent converges under refinement") {
    auto inv = dispersion_symbol::capillary_whitham(0.5).invert();
    grid g1(1 << 22, 2.5);
    grid g2(1 << 23, 2.5);
    const auto r1 = near_origin_exponent(compute_kernel(inv, 1.0 / 0.9, g1), 2.5e-6, 2.5e-5);
    const auto r2 = near_origin_exponent(compute_kernel(inv, 1.0 / 0.9, g2), 2.5e-6, 2.5e-5);
    for (const auto& r : {r1, r2}) {
        CHECK(r.model == origin_fit_report::model_kind::power);
        CHECK(r.exponent > -0.55);
        CHECK(r.exponent < -0.45);
    }
    CHECK(std::fabs(r2.exponent - r1.exponent) < 0.01);
}

TEST_CASE("origin fit guards") {
    grid g(1 << 13, 40.0);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    CHECK_THROWS_AS(near_origin_exponent(k, 0.0, 0.2), fit_error);
    CHECK_THROWS_AS(near_origin_exponent(k, 0.01, 0.6), fit_error);
    CHECK_THROWS_AS(near_origin_exponent(k, 0.01, 0.02), fit_error);  // < 8 nodes
}

TEST_CASE("weighted integrability: alpha above the threshold is grid-stable") {
    // alpha = 0.6 > 1 + m0 = 0.5 for whitham: the integral settles under h -> h/2
    const auto sym = dispersion_symbol::whitham();
    auto integral = [&](std::size_t n) {
        grid g(n, 40.0);
        const auto k = compute_kernel(sym, 1.2, g);
        double s = 0.0;
        for (std::size_t j = 0; j < g.n(); ++j) {
            const double x = std::fabs(g.node(j));
            if (x < 1e-12) continue;
            s += std::pow(x, 0.6) * std::fabs(k.values[j]);
        }
        return g.spacing() * s;
    };
    const double i1 = integral(1 << 13);
    const double i2 = integral(1 << 14);
    CHECK(std::fabs(i2 - i1) < 0.01 * std::fabs(i1));
}

TEST_CASE("weighted integrability: alpha below the threshold diverges near 0") {
    // alpha = 0.4 < 0.5: sup over (0, 0.01] grows like h^{-0.1}
    const auto sym = dispersion_symbol::whitham();
    auto sup_near0 = [&](std::size_t n) {
        grid g(n, 2.5);
        const auto k = compute_kernel(sym, 1.2, g);
        double s = 0.0;
        for (std::size_t j = 0; j < g.n(); ++j) {
            const double x = g.node(j);
            if (x <= 1e-15 || x > 0.01) continue;
            s = std::max(s, std::pow(x, 0.4) * std::fabs(k.values[j]));
        }
        return s;
    };
    const double s1 = sup_near0(1 << 18);
    const double s2 = sup_near0(1 << 20);
    const double s3 = sup_near0(1 << 22);
    CHECK(s2 > s1);
    CHECK(s3 > s2);
    CHECK(s3 > 1.1 * s1);
}

TEST_CASE("exponentially weighted integral is stable under doubling X") {
    const auto sym = dispersion_symbol::whitham();
    const double d = solve_delta(sym, 1.2).delta_c;
    auto weighted = [&](std::size_t n, double X) {
        grid g(n, X);
        const auto k = compute_kernel(sym, 1.2, g);
        double amax = 0.0;
        for (double v : k.values) amax = std::max(amax, std::fabs(v));
        // clip at the spectral-truncation floor; below it the samples carry
        // no tail signal
        const double floor = 1e-6 * amax;
        double s = 0.0;
        for (std::size_t j = 0; j < g.n(); ++j) {
            const double v = std::fabs(k.values[j]);
            if (v <= floor) continue;
            s += std::exp(0.9 * d * std::fabs(g.node(j))) * v;
        }
        return g.spacing() * s;
    };
    const double w1 = weighted(1 << 13, 40.0);
    const double w2 = weighted(1 << 14, 80.0);
    CHECK(std::fabs(w2 - w1) < 0.01 * std::fabs(w1));
}

TEST_CASE("positivity and monotone decrease on (0, X/2)") {
    for (auto sym : {dispersion_symbol::whitham(), dispersion_symbol::bidirectional_whitham()}) {
        grid g(1 << 14, 40.0);
        const auto k = compute_kernel(sym, 1.05, g);
        double prev = 0.0;
        bool first = true;
        for (std::size_t j = 0; j < g.n(); ++j) {
            const double x = g.node(j);
            if (x < 3.0 * g.spacing() - 1e-12 || x > 20.0) continue;
            CHECK(k.values[j] > 0.0);
            if (!first) CHECK(k.values[j] < prev);
            prev = k.values[j];
            first = false;
        }
    }
}

TEST_CASE("decay model assembly") {
    grid g(1 << 14, 80.0);
    const auto k = compute_kernel(dispersion_symbol::whitham(), 1.2, g);
    const auto m = fit_decay_model(k, 8.0, 14.0);
    CHECK(m.poly_order == 0);
    CHECK(m.delta_c > 0.0);
    CHECK(m.delta_c < dispersion_symbol::whitham().strip_height());
    CHECK(m.prefactor == doctest::Approx(analytic_prefactor(dispersion_symbol::whitham(), 1.2,
                                                            m.delta_c)));
    const auto dw = default_tail_window(g, m.delta_c);
    CHECK(dw.first == doctest::Approx(10.0));
    CHECK(dw.second == doctest::Approx(40.0));
}
