#ifndef WAVEDECAY_PARALLEL_HPP
#define WAVEDECAY_PARALLEL_HPP

#include <cstddef>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wavedecay {

// Execution mode for the data-parallel kernels. Both modes produce identical
// bits: element maps write disjoint slots, and reductions run over a fixed
// chunk grid combined in chunk order, so the result does not depend on the
// thread count. Work smaller than omp_grain runs serially either way; the
// fork/join overhead dominates below that size.
enum class exec { seq, omp };

namespace par {

inline constexpr std::size_t reduce_chunks = 256;
inline constexpr std::size_t omp_grain = std::size_t{1} << 16;

namespace detail {

template <class F>
void for_each_impl(std::size_t n, bool use_omp, F&& body) {
#ifdef _OPENMP
    if (use_omp) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)use_omp;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace detail

template <class F>
void for_each(std::size_t n, exec mode, F&& body) {
    detail::for_each_impl(n, mode == exec::omp && n >= omp_grain, body);
}

template <class F>
double sum(std::size_t n, exec mode, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nc = n < reduce_chunks ? 1 : reduce_chunks;
    const std::size_t len = (n + nc - 1) / nc;
    std::vector<double> partial(nc, 0.0);
    detail::for_each_impl(nc, mode == exec::omp && n >= omp_grain, [&](std::size_t c) {
        const std::size_t lo = c * len;
        const std::size_t hi = lo + len < n ? lo + len : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[c] = s;
    });
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

template <class F>
double max_value(std::size_t n, exec mode, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nc = n < reduce_chunks ? 1 : reduce_chunks;
    const std::size_t len = (n + nc - 1) / nc;
    std::vector<double> partial(nc, -std::numeric_limits<double>::infinity());
    detail::for_each_impl(nc, mode == exec::omp && n >= omp_grain, [&](std::size_t c) {
        const std::size_t lo = c * len;
        if (lo >= n) return;
        const std::size_t hi = lo + len < n ? lo + len : n;
        double m = term(lo);
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const double v = term(i);
            if (v > m) m = v;
        }
        partial[c] = m;
    });
    double m = partial[0];
    for (double p : partial)
        if (p > m) m = p;
    return m;
}

}  // namespace par
}  // namespace wavedecay

#endif
