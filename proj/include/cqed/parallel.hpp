// parallel.hpp - thread control and deterministic parallel reductions.
//
// Reductions split the index range into fixed-size blocks, sum each block
// sequentially and then add the block partials in index order. The result does
// not depend on the number of threads.

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cqed {

inline constexpr std::size_t kReduceBlock = 64;

void set_threads(int n);
int max_threads();

// Thread count from CQED_THREADS, or 0 when unset or malformed.
int threads_from_env();

template <class F>
double blocked_sum(std::size_t n, F&& term) {
    const std::size_t nb = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> part(nb, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = lo + kReduceBlock < n ? lo + kReduceBlock : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        part[static_cast<std::size_t>(b)] = s;
    }
    double total = 0.0;
    for (double s : part) total += s;
    return total;
}

// Serial reference: one running sum in index order.
template <class F>
double serial_sum(std::size_t n, F&& term) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += term(i);
    return total;
}

// Evaluates fn(i) for every i in parallel; fn writes its own output slot.
// An exception thrown for index i is rethrown after the loop (lowest i wins).
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    std::vector<std::exception_ptr> err(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
            err[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : err)
        if (e) std::rethrow_exception(e);
}

} // namespace cqed
