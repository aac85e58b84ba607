#ifndef WAVEDECAY_RUNNER_HPP
#define WAVEDECAY_RUNNER_HPP

#include "wavedecay/config.hpp"

namespace wavedecay {

inline constexpr const char* version_string = "0.1.0";

// Executes the configured subcommand for every speed in the list (optionally
// on a small worker pool) and writes CSV/JSON artifacts plus a resolved
// config echo into cfg.out_dir. Returns the process exit code: 0 success,
// 1 operational error, 2 at least one verification verdict out of tolerance.
int run(const run_config& cfg);

}  // namespace wavedecay

#endif
