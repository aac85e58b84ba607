#include "wavedecay/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "wavedecay/errors.hpp"
#include "wavedecay/fft.hpp"
#include "wavedecay/io.hpp"

namespace wavedecay {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    std::ostringstream os;
    os << "config line " << line << ": " << what;
    throw config_error(os.str());
}

double parse_double(const std::string& key, const std::string& v, std::size_t line) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) fail(line, "malformed value '" + v + "' for key '" + key + "'");
        return x;
    } catch (const config_error&) {
        throw;
    } catch (...) {
        fail(line, "malformed value '" + v + "' for key '" + key + "'");
    }
}

std::size_t parse_size(const std::string& key, const std::string& v, std::size_t line) {
    const double x = parse_double(key, v, line);
    if (x < 0 || x != std::floor(x))
        fail(line, "key '" + key + "' needs a nonnegative integer, got '" + v + "'");
    return static_cast<std::size_t>(x);
}

}  // namespace

std::string default_nonlinearity(const std::string& symbol_name) {
    return symbol_name == "bidirectional-whitham" ? "wb-cubic" : "quadratic";
}

run_config parse_config(const std::string& text) {
    run_config cfg;
    cfg.speeds.clear();
    bool nonlin_set = false;

    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(lineno, "expected 'key = value': '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(lineno, "empty key");
        if (value.empty()) fail(lineno, "empty value for key '" + key + "'");

        if (key == "symbol") {
            cfg.symbol_name = value;
        } else if (key == "beta") {
            cfg.symbol_params["beta"] = parse_double(key, value, lineno);
        } else if (key == "c") {
            std::istringstream cs(value);
            std::string item;
            while (std::getline(cs, item, ',')) {
                item = trim(item);
                if (item.empty()) fail(lineno, "empty entry in speed list");
                cfg.speeds.push_back(parse_double(key, item, lineno));
            }
        } else if (key == "grid.n") {
            cfg.grid_n = parse_size(key, value, lineno);
        } else if (key == "grid.X") {
            cfg.grid_x = parse_double(key, value, lineno);
        } else if (key == "solver.method") {
            if (value != "petviashvili" && value != "damped")
                fail(lineno, "solver.method must be petviashvili or damped");
            cfg.solver_method = value;
        } else if (key == "solver.tol") {
            cfg.solver_tol = parse_double(key, value, lineno);
        } else if (key == "solver.max_iter") {
            cfg.solver_max_iter = parse_size(key, value, lineno);
        } else if (key == "solver.theta") {
            cfg.solver_theta = parse_double(key, value, lineno);
        } else if (key == "solver.gamma") {
            cfg.solver_gamma = parse_double(key, value, lineno);
        } else if (key == "nonlinearity") {
            if (value != "quadratic" && value != "wb-cubic" && value != "power-r")
                fail(lineno, "nonlinearity must be quadratic, wb-cubic or power-r");
            cfg.nonlinearity_name = value;
            nonlin_set = true;
        } else if (key == "nonlinearity.degree") {
            cfg.nonlinearity_degree = parse_double(key, value, lineno);
        } else if (key == "fit.origin_lo") {
            cfg.fit_origin_lo = parse_double(key, value, lineno);
        } else if (key == "fit.origin_hi") {
            cfg.fit_origin_hi = parse_double(key, value, lineno);
        } else if (key == "fit.tail_lo") {
            cfg.fit_tail_lo = parse_double(key, value, lineno);
        } else if (key == "fit.tail_hi") {
            cfg.fit_tail_hi = parse_double(key, value, lineno);
        } else if (key == "fit.decay_lo") {
            cfg.fit_decay_lo = parse_double(key, value, lineno);
        } else if (key == "fit.decay_hi") {
            cfg.fit_decay_hi = parse_double(key, value, lineno);
        } else if (key == "verify.decay_tol") {
            cfg.verify_decay_tol = parse_double(key, value, lineno);
        } else if (key == "verify.asym_tol") {
            cfg.verify_asym_tol = parse_double(key, value, lineno);
        } else if (key == "out.dir") {
            cfg.out_dir = value;
        } else if (key == "out.formats") {
            cfg.out_csv = cfg.out_json = false;
            std::istringstream fs(value);
            std::string fmt;
            while (std::getline(fs, fmt, ',')) {
                fmt = trim(fmt);
                if (fmt == "csv")
                    cfg.out_csv = true;
                else if (fmt == "json")
                    cfg.out_json = true;
                else
                    fail(lineno, "unknown format '" + fmt + "' (csv, json)");
            }
        } else if (key == "jobs") {
            cfg.jobs = parse_size(key, value, lineno);
            if (cfg.jobs == 0) fail(lineno, "jobs must be >= 1");
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }

    if (cfg.speeds.empty()) cfg.speeds = {1.1};
    if (!nonlin_set) cfg.nonlinearity_name = default_nonlinearity(cfg.symbol_name);

    // invariants; symbol construction also applies its own gates (beta)
    if (!is_power_of_two(cfg.grid_n) || cfg.grid_n < 256) {
        std::ostringstream os;
        os << "grid.n = " << cfg.grid_n << " is not a power of two >= 256";
        throw config_error(os.str());
    }
    if (!(cfg.grid_x > 0.0)) throw config_error("grid.X must be positive");
    for (double c : cfg.speeds)
        if (!(c > 0.0)) throw config_error("speed list entries must be positive");
    if (!(cfg.solver_tol > 0.0)) throw config_error("solver.tol must be positive");
    if (!(cfg.verify_decay_tol > 0.0) || !(cfg.verify_asym_tol > 0.0))
        throw config_error("verify tolerances must be positive");
    if (!(cfg.solver_theta > 0.0 && cfg.solver_theta <= 1.0))
        throw config_error("solver.theta must lie in (0, 1]");
    if (cfg.symbol_name == "capillary-whitham" && !cfg.symbol_params.count("beta"))
        throw config_error("capillary-whitham requires 'beta'");
    // reject an unsupported bond number at parse time, before any symbol is built
    if (cfg.symbol_params.count("beta")) {
        const double beta = cfg.symbol_params.at("beta");
        if (!(beta > 0.405284734569351086)) {
            std::ostringstream os;
            os << "beta = " << beta << " <= 4/pi^2 is unsupported";
            throw config_error(os.str());
        }
    }
    return cfg;
}

std::string echo_config(const run_config& cfg) {
    std::ostringstream os;
    os << "symbol = " << cfg.symbol_name << "\n";
    for (const auto& [k, v] : cfg.symbol_params) os << k << " = " << format_double(v) << "\n";
    os << "c = ";
    for (std::size_t i = 0; i < cfg.speeds.size(); ++i)
        os << (i ? ", " : "") << format_double(cfg.speeds[i]);
    os << "\n";
    os << "grid.n = " << cfg.grid_n << "\n";
    os << "grid.X = " << format_double(cfg.grid_x) << "\n";
    os << "solver.method = " << cfg.solver_method << "\n";
    os << "nonlinearity = " << cfg.nonlinearity_name << "\n";
    if (cfg.nonlinearity_name == "power-r")
        os << "nonlinearity.degree = " << format_double(cfg.nonlinearity_degree) << "\n";
    os << "solver.tol = " << format_double(cfg.solver_tol) << "\n";
    os << "solver.max_iter = " << cfg.solver_max_iter << "\n";
    os << "solver.theta = " << format_double(cfg.solver_theta) << "\n";
    os << "solver.gamma = " << format_double(cfg.solver_gamma) << "\n";
    os << "fit.origin_lo = " << format_double(cfg.fit_origin_lo) << "\n";
    os << "fit.origin_hi = " << format_double(cfg.fit_origin_hi) << "\n";
    os << "fit.tail_lo = " << format_double(cfg.fit_tail_lo) << "\n";
    os << "fit.tail_hi = " << format_double(cfg.fit_tail_hi) << "\n";
    os << "fit.decay_lo = " << format_double(cfg.fit_decay_lo) << "\n";
    os << "fit.decay_hi = " << format_double(cfg.fit_decay_hi) << "\n";
    os << "verify.decay_tol = " << format_double(cfg.verify_decay_tol) << "\n";
    os << "verify.asym_tol = " << format_double(cfg.verify_asym_tol) << "\n";
    os << "out.dir = " << cfg.out_dir << "\n";
    os << "out.formats = ";
    if (cfg.out_csv && cfg.out_json)
        os << "csv, json";
    else if (cfg.out_csv)
        os << "csv";
    else
        os << "json";
    os << "\n";
    os << "jobs = " << cfg.jobs << "\n";
    return os.str();
}

std::string subcommand_name(subcommand cmd) {
    switch (cmd) {
        case subcommand::delta: return "delta";
        case subcommand::kernel: return "kernel";
        case subcommand::solve: return "solve";
        case subcommand::verify: return "verify";
        case subcommand::report: return "report";
    }
    return "?";
}

subcommand subcommand_from_name(const std::string& name) {
    if (name == "delta") return subcommand::delta;
    if (name == "kernel") return subcommand::kernel;
    if (name == "solve") return subcommand::solve;
    if (name == "verify") return subcommand::verify;
    if (name == "report") return subcommand::report;
    throw config_error("unknown subcommand '" + name + "'");
}

}  // namespace wavedecay
