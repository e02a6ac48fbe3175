// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_PARALLEL_HPP
#define MIMOSEC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mimosec {

inline unsigned resolve_threads(unsigned threads) {
    if (threads != 0)
        return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n) on up to `threads` threads using a static
// block partition. fn must only write to per-index state; results are
// independent of the thread count. The first exception thrown inside a
// worker is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    if (threads > n)
        threads = static_cast<unsigned>(n);

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = n * t / threads;
        const std::size_t end = n * (t + 1) / threads;
        pool.emplace_back([&fn, &errors, t, begin, end]() {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool)
        th.join();
    for (const std::exception_ptr& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace mimosec

#endif
