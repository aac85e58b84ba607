#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wavedecay/config.hpp"
#include "wavedecay/io.hpp"
#include "wavedecay/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"wavedecay: kernels, decay rates and solitary waves of nonlocal "
                 "dispersive (Whitham-family) equations"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string formats;
    std::size_t jobs = 0;

    for (const char* name : {"delta", "kernel", "solve", "verify", "report"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration file (key = value)")
            ->required();
        sub->add_option("--out", out_dir, "output directory (overrides out.dir)");
        sub->add_option("--format", formats, "comma-separated output formats: csv,json");
        sub->add_option("--jobs", jobs, "worker threads for speed sweeps");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = wavedecay::parse_config(wavedecay::read_text_file(config_path));
        cfg.cmd = wavedecay::subcommand_from_name(app.get_subcommands().front()->get_name());
        if (!out_dir.empty()) cfg.out_dir = out_dir;
        if (jobs > 0) cfg.jobs = jobs;
        if (!formats.empty()) {
            cfg.out_csv = formats.find("csv") != std::string::npos;
            cfg.out_json = formats.find("json") != std::string::npos;
            if (!cfg.out_csv && !cfg.out_json) {
                std::cerr << "wavedecay: --format must name csv and/or json\n";
                return 1;
            }
        }
        return wavedecay::run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "wavedecay: " << e.what() << "\n";
        return 1;
    }
}
