#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wavedecay/config.hpp"
#include "wavedecay/io.hpp"
#include "wavedecay/runner.hpp"

using namespace wavedecay;
namespace fs = std::filesystem;

namespace {

std::string fresh_dir(const std::string& tag) {
    const auto dir = fs::temp_directory_path() / ("wavedecay_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir.string();
}

nlohmann::json load_json(const std::string& path) {
    return nlohmann::json::parse(read_text_file(path));
}

}  // namespace

TEST_CASE("delta subcommand writes the closed-form rate") {
    const auto dir = fresh_dir("delta");
    run_config cfg = parse_config("symbol = whitham\nc = 1.1283791670955126\n");
    cfg.cmd = subcommand::delta;
    cfg.out_dir = dir;
    CHECK(run(cfg) == 0);
    const auto j = load_json(dir + "/whitham_c1.1283791670955126_delta.json");
    CHECK(std::fabs(j["delta_c"].get<double>() - M_PI / 4.0) < 1e-10);
    CHECK(j["inverted"].get<bool>() == false);
    CHECK(fs::exists(dir + "/run_config.txt"));
    CHECK(fs::exists(dir + "/run_meta.json"));
}

TEST_CASE("capillary delta routes through the inverted symbol") {
    const auto dir = fresh_dir("cap");
    run_config cfg = parse_config("symbol = capillary-whitham\nbeta = 0.5\nc = 0.9\n");
    cfg.cmd = subcommand::delta;
    cfg.out_dir = dir;
    CHECK(run(cfg) == 0);
    const auto j = load_json(dir + "/capillary-whitham_c0.9_delta.json");
    CHECK(j["inverted"].get<bool>() == true);
    const double d = j["delta_c"].get<double>();
    CHECK(d > 0.0);
    CHECK(d < std::sqrt(2.0));
    CHECK(j["residual"].get<double>() <= 1e-12 * (1.0 / 0.9));
}

TEST_CASE("kernel subcommand writes csv and fit report") {
    const auto dir = fresh_dir("kernel");
    run_config cfg = parse_config(
        "symbol = whitham\nc = 1.2\ngrid.n = 8192\ngrid.X = 40\n"
        "fit.tail_lo = 8\nfit.tail_hi = 14\n");
    cfg.cmd = subcommand::kernel;
    cfg.out_dir = dir;
    CHECK(run(cfg) == 0);
    const auto j = load_json(dir + "/whitham_c1.2_kernel.json");
    CHECK(std::fabs(j["zero_frequency"]["relative_deviation"].get<double>()) < 1e-6);
    CHECK(j["tail_fit"].contains("delta_hat"));
    CHECK(j["decay_model"]["poly_order"].get<int>() == 0);

    std::ifstream csv(dir + "/whitham_c1.2_kernel.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "x,H_c");
    std::string first;
    std::getline(csv, first);
    CHECK(first.find(',') != std::string::npos);
    CHECK(first.find('e') != std::string::npos);  // scientific notation
}

TEST_CASE("verify subcommand: whitham c=1.1 passes end to end") {
    const auto dir = fresh_dir("verify");
    run_config cfg = parse_config("symbol = whitham\nc = 1.1\ngrid.n = 16384\ngrid.X = 120\n");
    cfg.cmd = subcommand::verify;
    cfg.out_dir = dir;
    CHECK(run(cfg) == 0);
    const auto j = load_json(dir + "/whitham_c1.1_verify.json");
    CHECK(j["pass"]["overall"].get<bool>());
    CHECK(j["decay"]["relative_error"].get<double>() <= 0.05);
    CHECK(j["symmetry"]["crest_count"].get<std::size_t>() == 1);
}

TEST_CASE("solve with an inadmissible speed exits 1") {
    const auto dir = fresh_dir("inadmissible");
    run_config cfg = parse_config("symbol = whitham\nc = 0.9\ngrid.n = 1024\ngrid.X = 40\n");
    cfg.cmd = subcommand::solve;
    cfg.out_dir = dir;
    CHECK(run(cfg) == 1);
}

TEST_CASE("repeated verify runs are byte-identical") {
    run_config cfg = parse_config("symbol = whitham\nc = 1.1\ngrid.n = 8192\ngrid.X = 80\n");
    cfg.cmd = subcommand::verify;
    const auto d1 = fresh_dir("det1");
    const auto d2 = fresh_dir("det2");
    cfg.out_dir = d1;
    CHECK(run(cfg) == 0);
    cfg.out_dir = d2;
    CHECK(run(cfg) == 0);
    for (const char* name : {"whitham_c1.1_wave.csv", "whitham_c1.1_wave.json",
                             "whitham_c1.1_verify.json"}) {
        const auto a = read_text_file(d1 + "/" + name);
        const auto b = read_text_file(d2 + "/" + name);
        CHECK(a == b);
    }
    // config echoes differ only in the out.dir they record
    std::istringstream ea(read_text_file(d1 + "/run_config.txt"));
    std::istringstream eb(read_text_file(d2 + "/run_config.txt"));
    std::string la, lb;
    while (std::getline(ea, la) && std::getline(eb, lb)) {
        if (la.rfind("out.dir", 0) == 0) continue;
        CHECK(la == lb);
    }
}

TEST_CASE("speed sweeps run on a worker pool with per-speed artifacts") {
    const auto dir = fresh_dir("sweep");
    run_config cfg = parse_config("symbol = whitham\nc = 1.2, 1.3, 1.4\ngrid.n = 4096\n"
                                  "grid.X = 40\njobs = 3\nfit.tail_lo = 6\nfit.tail_hi = 12\n");
    cfg.cmd = subcommand::kernel;
    cfg.out_dir = dir;
    CHECK(run(cfg) == 0);
    for (const char* c : {"1.2", "1.3", "1.4"})
        CHECK(fs::exists(dir + "/whitham_c" + std::string(c) + "_kernel.json"));
}
