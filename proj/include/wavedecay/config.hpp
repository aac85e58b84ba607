#ifndef WAVEDECAY_CONFIG_HPP
#define WAVEDECAY_CONFIG_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wavedecay {

enum class subcommand { delta, kernel, solve, verify, report };

// Fully-resolved run description. Window values of 0 mean "use the default
// for the computed kernel/wave"; the resolved values are echoed next to the
// outputs for reproducibility.
struct run_config {
    subcommand cmd = subcommand::verify;

    std::string symbol_name = "whitham";
    std::map<std::string, double> symbol_params;  // capillary-whitham: beta

    std::vector<double> speeds = {1.1};

    std::size_t grid_n = 16384;
    double grid_x = 80.0;

    std::string solver_method = "petviashvili";  // petviashvili | damped
    std::string nonlinearity_name;               // default depends on the symbol
    double nonlinearity_degree = 2.0;            // power-r only
    double solver_tol = 1e-10;
    std::size_t solver_max_iter = 2000;
    double solver_theta = 0.5;
    double solver_gamma = 0.0;  // 0 -> p/(p-1)

    double fit_origin_lo = 0.0, fit_origin_hi = 0.0;
    double fit_tail_lo = 0.0, fit_tail_hi = 0.0;
    double fit_decay_lo = 0.0, fit_decay_hi = 0.0;

    double verify_decay_tol = 0.05;
    double verify_asym_tol = 1e-6;

    std::string out_dir = ".";
    bool out_csv = true;
    bool out_json = true;
    std::size_t jobs = 1;
};

// Parses line-oriented `key = value` text ('#' starts a comment, keys dotted).
// Unknown keys, malformed values, and invariant violations raise config_error
// naming the key and line number.
run_config parse_config(const std::string& text);

// Canonical echo of a resolved config (parseable by parse_config).
std::string echo_config(const run_config& cfg);

std::string subcommand_name(subcommand cmd);
subcommand subcommand_from_name(const std::string& name);

// Default nonlinearity for a symbol: wb-cubic for bidirectional-whitham,
// quadratic otherwise.
std::string default_nonlinearity(const std::string& symbol_name);

}  // namespace wavedecay

#endif
