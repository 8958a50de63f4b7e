#pragma once

#include <atomic>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pha::par {

// Global switch between the OpenMP kernels and the serial reference path.
// Results are identical either way; tests flip this to compare the two.
inline std::atomic<bool>& parallel_flag() {
    static std::atomic<bool> flag{true};
    return flag;
}
inline bool parallel_enabled() {
#ifdef _OPENMP
    return parallel_flag().load(std::memory_order_relaxed);
#else
    return false;
#endif
}
inline void set_parallel(bool on) { parallel_flag().store(on, std::memory_order_relaxed); }

struct SerialGuard {
    bool prev;
    SerialGuard() : prev(parallel_flag().load()) { set_parallel(false); }
    ~SerialGuard() { set_parallel(prev); }
};

/// Run fn(i) for i in [0, n). Exceptions are captured inside the parallel
/// region and rethrown afterwards (first one wins).
template <typename Fn>
void for_each_index(long n, Fn&& fn) {
    if (n <= 0) return;
    if (!parallel_enabled() || n == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long i = 0; i < n; ++i) {
        try {
            fn(i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pha_par_err)
#endif
            {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
}

/// Evaluate pred(i) over [0, n); return the smallest index where pred is
/// false, or -1 when all hold. Deterministic regardless of scheduling.
template <typename Pred>
long first_failure(long n, Pred&& pred) {
    if (n <= 0) return -1;
    if (!parallel_enabled() || n == 1) {
        for (long i = 0; i < n; ++i)
            if (!pred(i)) return i;
        return -1;
    }
    std::atomic<long> best{n};
    std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (long i = 0; i < n; ++i) {
        if (i >= best.load(std::memory_order_relaxed)) continue;
        try {
            if (!pred(i)) {
                long cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {}
            }
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(pha_par_err2)
#endif
            {
                if (!err) err = std::current_exception();
            }
        }
    }
    if (err) std::rethrow_exception(err);
    const long b = best.load();
    return b == n ? -1 : b;
}

} // namespace pha::par
