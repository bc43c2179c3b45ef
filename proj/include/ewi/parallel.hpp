#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ewi {

// Worker count used by the parallel loops. Defaults to the EWI_THREADS
// environment variable, falling back to std::thread::hardware_concurrency().
unsigned thread_count();
void set_thread_count(unsigned n);

// Runs body(begin, end) on contiguous static chunks of [0, n). Chunk
// boundaries depend only on n and the worker count, so callers that reduce
// per-chunk results in chunk order get schedule-independent output.
template <class Body>
void parallel_chunks(std::size_t n, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        if (n) body(std::size_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t step = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * step, hi = std::min(n, lo + step);
        if (lo >= hi) break;
        pool.emplace_back([&, w, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    parallel_chunks(n, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) body(i);
    });
}

} // namespace ewi
