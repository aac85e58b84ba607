// Timing comparison of the serial and OpenMP paths of the data-parallel
// kernels. Both paths compute identical bits; this target only reports speed.

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "wavedecay/fft.hpp"
#include "wavedecay/grid.hpp"
#include "wavedecay/kernel.hpp"
#include "wavedecay/parallel.hpp"
#include "wavedecay/symbols.hpp"
#include "wavedecay/wave_solver.hpp"

using namespace wavedecay;

namespace {

double time_ms(const std::function<void()>& body, int reps) {
    body();  // warm up
    std::vector<double> t(reps);
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        body();
        const auto t1 = std::chrono::steady_clock::now();
        t[r] = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    std::sort(t.begin(), t.end());
    return t[reps / 2];
}

void row(const char* name, double seq_ms, double omp_ms) {
    std::printf("%-34s %10.3f %10.3f %8.2fx\n", name, seq_ms, omp_ms, seq_ms / omp_ms);
}

}  // namespace

int main() {
    std::printf("%-34s %10s %10s %9s\n", "kernel", "seq ms", "omp ms", "speedup");

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    for (std::size_t n : {std::size_t{1} << 14, std::size_t{1} << 18, std::size_t{1} << 20}) {
        std::vector<std::complex<double>> base(n);
        for (auto& x : base) x = {dist(rng), dist(rng)};
        fft_plan plan(n);
        auto work = [&](exec m) {
            auto a = base;
            plan.forward(a.data(), m);
        };
        char name[64];
        std::snprintf(name, sizeof(name), "fft forward n=2^%d",
                      static_cast<int>(std::log2(static_cast<double>(n))));
        row(name, time_ms([&] { work(exec::seq); }, 5), time_ms([&] { work(exec::omp); }, 5));
    }

    {
        const std::size_t n = std::size_t{1} << 20;
        grid g(n, 80.0);
        const auto sym = dispersion_symbol::whitham();
        std::vector<double> out(n);
        auto work = [&](exec m) {
            par::for_each(n, m, [&](std::size_t k) { out[k] = sym.eval_real(g.wavenumber(k)); });
        };
        row("symbol table n=2^20", time_ms([&] { work(exec::seq); }, 5),
            time_ms([&] { work(exec::omp); }, 5));
    }

    {
        const std::size_t n = std::size_t{1} << 22;
        std::vector<double> v(n);
        for (auto& x : v) x = dist(rng);
        volatile double sink = 0.0;
        auto work = [&](exec m) {
            sink = par::sum(n, m, [&](std::size_t i) { return v[i] * v[i]; });
        };
        (void)sink;
        row("chunked sum n=2^22", time_ms([&] { work(exec::seq); }, 5),
            time_ms([&] { work(exec::omp); }, 5));
    }

    {
        grid g(std::size_t{1} << 18, 80.0);
        std::vector<double> f(g.n());
        for (std::size_t j = 0; j < g.n(); ++j) f[j] = std::exp(-0.1 * g.node(j) * g.node(j));
        auto work = [&](exec m) {
            apply_multiplier(dispersion_symbol::whitham(), 1.2,
                             multiplier_form::symbol_over_shift, g, f, m);
        };
        row("spectral multiplier n=2^18", time_ms([&] { work(exec::seq); }, 5),
            time_ms([&] { work(exec::omp); }, 5));
    }

    {
        grid g(std::size_t{1} << 18, 80.0);
        auto work = [&](exec m) {
            compute_kernel(dispersion_symbol::whitham(), 1.2, g, m);
        };
        row("compute_kernel n=2^18", time_ms([&] { work(exec::seq); }, 5),
            time_ms([&] { work(exec::omp); }, 5));
    }

    {
        grid g(std::size_t{1} << 14, 120.0);
        auto work = [&](exec m) {
            solve_petviashvili(dispersion_symbol::whitham(), 1.1, nonlinearity::quadratic(),
                               g, {}, m);
        };
        // below the omp grain a solve runs serially in both modes
        row("petviashvili whitham n=2^14", time_ms([&] { work(exec::seq); }, 3),
            time_ms([&] { work(exec::omp); }, 3));
    }
    return 0;
}
