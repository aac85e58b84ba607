#include "wavedecay/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include <json.hpp>

#include "wavedecay/decay_rate.hpp"
#include "wavedecay/errors.hpp"
#include "wavedecay/io.hpp"
#include "wavedecay/kernel.hpp"
#include "wavedecay/verify.hpp"
#include "wavedecay/wave_solver.hpp"

namespace wavedecay {

namespace {

using ordered_json = nlohmann::ordered_json;

struct job_outcome {
    bool verify_failed = false;
};

nonlinearity make_nonlinearity(const run_config& cfg, double c) {
    if (cfg.nonlinearity_name == "quadratic") return nonlinearity::quadratic();
    if (cfg.nonlinearity_name == "wb-cubic") return nonlinearity::wb_cubic(c);
    if (cfg.nonlinearity_name == "power-r") return nonlinearity::power(cfg.nonlinearity_degree);
    throw config_error("unknown nonlinearity '" + cfg.nonlinearity_name + "'");
}

std::string artifact_prefix(const run_config& cfg, double c) {
    return cfg.out_dir + "/" + cfg.symbol_name + "_c" + format_double(c);
}

// For a differentiating symbol the decay/kernel path works on m~ = 1/m at
// speed 1/c.
struct decay_route {
    dispersion_symbol sym;
    double speed;
    bool inverted;
};

decay_route route_for(const dispersion_symbol& sym, double c) {
    if (sym.differentiating()) return {sym.invert(), 1.0 / c, true};
    return {sym, c, false};
}

ordered_json delta_payload(const dispersion_symbol& sym, double c) {
    const auto route = route_for(sym, c);
    const auto r = solve_delta(route.sym, route.speed);
    ordered_json j;
    j["symbol"] = sym.name();
    j["c"] = c;
    j["inverted"] = route.inverted;
    j["effective_symbol"] = route.sym.name();
    j["effective_speed"] = route.speed;
    j["c_eff"] = std::pow(route.speed, route.sym.c_power());
    j["delta_c"] = r.delta_c;
    j["residual"] = r.residual;
    j["iterations"] = r.iterations;
    j["bracket"] = {r.bracket_lo, r.bracket_hi};
    j["strip_height"] = route.sym.strip_height();
    return j;
}

ordered_json kernel_payload(const run_config& cfg, const dispersion_symbol& sym, double c,
                            const kernel_samples& ks, const decay_rate_result& dr) {
    auto origin_win = default_origin_window(ks.g);
    if (cfg.fit_origin_lo > 0.0) origin_win.first = cfg.fit_origin_lo;
    if (cfg.fit_origin_hi > 0.0) origin_win.second = cfg.fit_origin_hi;
    auto tail_win = default_tail_window(ks.g, dr.delta_c);
    if (cfg.fit_tail_lo > 0.0) tail_win.first = cfg.fit_tail_lo;
    if (cfg.fit_tail_hi > 0.0) tail_win.second = cfg.fit_tail_hi;

    ordered_json j;
    j["symbol"] = sym.name();
    j["c"] = c;
    j["grid"] = {{"n", ks.g.n()}, {"X", ks.g.half_length()}};
    j["c_eff"] = ks.c_eff;
    j["delta_c"] = dr.delta_c;
    j["wrap_error_bound"] = wrap_error_bound(dr.delta_c, ks.g);

    const double integral = trapezoid_integral(ks);
    const double m0 = ks.symbol.eval_real(0.0);
    const double target = 2.50662827463100050240 * m0 / (ks.c_eff - m0);
    j["zero_frequency"] = {{"integral", integral},
                           {"target", target},
                           {"relative_deviation", (integral - target) / target},
                           {"trusted", wrap_error_bound(dr.delta_c, ks.g) < 1e-10}};

    try {
        const auto of = near_origin_exponent(ks, origin_win.first, origin_win.second);
        j["origin_fit"] = {
            {"model", of.model == origin_fit_report::model_kind::power ? "power" : "log"},
            {"exponent", of.exponent},
            {"log_slope", of.log_slope},
            {"r2_power", of.r2_power},
            {"r2_log", of.r2_log},
            {"window", {of.x_lo, of.x_hi}},
            {"nodes", of.nodes}};
    } catch (const fit_error& e) {
        j["origin_fit"] = {{"error", e.what()}};
    }
    try {
        const auto tf = tail_decay_fit(ks, tail_win.first, tail_win.second);
        const double pref = analytic_prefactor(ks.symbol, ks.speed, dr.delta_c);
        j["tail_fit"] = {{"delta_hat", tf.delta_hat},
                         {"prefactor_hat", tf.prefactor_hat},
                         {"residual", tf.residual},
                         {"window", {tf.x_lo, tf.x_hi}},
                         {"nodes", tf.nodes}};
        j["decay_model"] = {{"delta_c", dr.delta_c},
                            {"prefactor", pref},
                            {"poly_order", 0},
                            {"fit_window", {tf.x_lo, tf.x_hi}},
                            {"fit_residual", tf.residual}};
    } catch (const fit_error& e) {
        j["tail_fit"] = {{"error", e.what()}};
    }
    return j;
}

solitary_wave solve_wave(const run_config& cfg, const dispersion_symbol& sym, double c,
                         const grid& g) {
    const auto nl = make_nonlinearity(cfg, c);
    solver_options opts;
    opts.tol = cfg.solver_tol;
    opts.max_iter = cfg.solver_max_iter;
    opts.theta = cfg.solver_theta;
    opts.gamma = cfg.solver_gamma;
    if (cfg.solver_method == "damped")
        return solve_damped_fixed_point(sym, c, nl, g, opts);
    return solve_petviashvili(sym, c, nl, g, opts);
}

ordered_json wave_payload(const solitary_wave& w) {
    ordered_json j;
    j["symbol"] = w.symbol.name();
    j["c"] = w.speed;
    j["c_eff"] = w.c_eff;
    j["grid"] = {{"n", w.g.n()}, {"X", w.g.half_length()}};
    j["nonlinearity"] = w.nonlin.name;
    j["converged"] = w.converged;
    j["iterations"] = w.iterations;
    j["residual_sup"] = w.residual_sup;
    j["amplitude"] = *std::max_element(w.samples.begin(), w.samples.end());
    if (!w.s_history.empty()) j["S_history"] = w.s_history;
    return j;
}

ordered_json verify_payload(const run_config& cfg, const solitary_wave& w,
                            const decay_rate_result& dr, bool& pass_out) {
    double lo = cfg.fit_decay_lo > 0.0 ? cfg.fit_decay_lo : 5.0 / dr.delta_c;
    double hi = cfg.fit_decay_hi > 0.0 ? cfg.fit_decay_hi : 0.8 * w.g.half_length();
    const auto dv = fit_solution_decay(w, dr.delta_c, lo, hi);
    const auto sv = check_symmetry(w);

    const bool pass_decay = dv.relative_error <= cfg.verify_decay_tol;
    const bool pass_asym = sv.sup_asymmetry <= cfg.verify_asym_tol * sv.amplitude;
    const bool pass_crest = sv.crest_count == 1;
    const bool pass_hyp = sv.g_nonnegative && sv.g_increasing && sv.lipschitz_ok;
    pass_out = pass_decay && pass_asym && pass_crest && pass_hyp && w.converged;

    ordered_json j;
    j["symbol"] = w.symbol.name();
    j["c"] = w.speed;
    j["delta_c"] = dr.delta_c;
    j["solver"] = wave_payload(w);
    j["decay"] = {{"delta_hat", dv.delta_hat},
                  {"delta_c_reference", dv.delta_c_reference},
                  {"relative_error", dv.relative_error},
                  {"plateau_value", dv.plateau_value},
                  {"window", {dv.window_lo, dv.window_hi}},
                  {"nodes", dv.nodes}};
    j["symmetry"] = {{"crest_location", sv.crest_location},
                     {"sup_asymmetry", sv.sup_asymmetry},
                     {"crest_count", sv.crest_count},
                     {"amplitude", sv.amplitude},
                     {"hypotheses",
                      {{"g_nonnegative", sv.g_nonnegative},
                       {"g_increasing", sv.g_increasing},
                       {"lipschitz_ok", sv.lipschitz_ok},
                       {"lipschitz_constant", sv.lipschitz_constant}}}};
    j["tolerances"] = {{"decay_rel", cfg.verify_decay_tol}, {"asym_rel", cfg.verify_asym_tol}};
    j["pass"] = {{"decay", pass_decay},
                 {"asymmetry", pass_asym},
                 {"single_crest", pass_crest},
                 {"hypotheses", pass_hyp},
                 {"converged", w.converged},
                 {"overall", pass_out}};
    return j;
}

void dump_json(const run_config& cfg, const std::string& path, const ordered_json& j) {
    if (cfg.out_json) write_text_file(path, j.dump(2) + "\n");
}

job_outcome run_one(const run_config& cfg, double c) {
    const auto sym = dispersion_symbol::by_name(cfg.symbol_name, cfg.symbol_params);
    const std::string prefix = artifact_prefix(cfg, c);
    job_outcome out;

    const bool want_delta = cfg.cmd == subcommand::delta || cfg.cmd == subcommand::report;
    const bool want_kernel = cfg.cmd == subcommand::kernel || cfg.cmd == subcommand::report;
    const bool want_solve = cfg.cmd == subcommand::solve || cfg.cmd == subcommand::report ||
                            cfg.cmd == subcommand::verify;
    const bool want_verify = cfg.cmd == subcommand::verify || cfg.cmd == subcommand::report;

    if (want_delta) dump_json(cfg, prefix + "_delta.json", delta_payload(sym, c));

    if (want_kernel) {
        const auto route = route_for(sym, c);
        const grid g(cfg.grid_n, cfg.grid_x);
        const auto ks = compute_kernel(route.sym, route.speed, g);
        const auto dr = solve_delta(route.sym, route.speed);
        if (cfg.out_csv) {
            std::vector<double> xs(g.n());
            for (std::size_t j = 0; j < g.n(); ++j) xs[j] = g.node(j);
            write_csv(prefix + "_kernel.csv", "x,H_c", xs, ks.values);
        }
        dump_json(cfg, prefix + "_kernel.json", kernel_payload(cfg, sym, c, ks, dr));
    }

    if (want_solve) {
        const grid g(cfg.grid_n, cfg.grid_x);
        const auto w = solve_wave(cfg, sym, c, g);
        if (cfg.out_csv) {
            std::vector<double> xs(g.n());
            for (std::size_t j = 0; j < g.n(); ++j) xs[j] = g.node(j);
            write_csv(prefix + "_wave.csv", "x,u", xs, w.samples);
        }
        dump_json(cfg, prefix + "_wave.json", wave_payload(w));

        if (want_verify) {
            const auto route = route_for(sym, c);
            const auto dr = solve_delta(route.sym, route.speed);
            bool pass = false;
            const auto vp = verify_payload(cfg, w, dr, pass);
            dump_json(cfg, prefix + "_verify.json", vp);
            if (!pass) out.verify_failed = true;
        }
    }
    return out;
}

}  // namespace

int run(const run_config& cfg) {
    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec) {
        std::cerr << "wavedecay: cannot create output directory '" << cfg.out_dir << "': "
                  << ec.message() << "\n";
        return 1;
    }

    try {
        write_text_file(cfg.out_dir + "/run_config.txt", echo_config(cfg));
        // provenance lives here, outside the data payloads
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char stamp[32];
        std::strftime(stamp, sizeof(stamp), "%FT%TZ", std::gmtime(&now));
        ordered_json meta;
        meta["tool"] = "wavedecay";
        meta["version"] = version_string;
        meta["subcommand"] = subcommand_name(cfg.cmd);
        meta["timestamp_utc"] = stamp;
        write_text_file(cfg.out_dir + "/run_meta.json", meta.dump(2) + "\n");
    } catch (const std::exception& e) {
        std::cerr << "wavedecay: " << e.what() << "\n";
        return 1;
    }

    std::atomic<bool> verify_failed{false};
    std::mutex err_mutex;
    std::vector<std::string> errors;

    const std::size_t jobs = std::max<std::size_t>(1, cfg.jobs);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cfg.speeds.size()) return;
            try {
                const auto out = run_one(cfg, cfg.speeds[i]);
                if (out.verify_failed) verify_failed = true;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                errors.emplace_back("c = " + format_double(cfg.speeds[i]) + ": " + e.what());
            }
        }
    };
    if (jobs == 1 || cfg.speeds.size() == 1) {
        worker();
    } else {
        for (std::size_t t = 0; t < std::min(jobs, cfg.speeds.size()); ++t)
            pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    if (!errors.empty()) {
        for (const auto& e : errors) std::cerr << "wavedecay: " << e << "\n";
        return 1;
    }
    return verify_failed ? 2 : 0;
}

}  // namespace wavedecay
