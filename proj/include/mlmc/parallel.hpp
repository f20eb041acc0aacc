// Deterministic index-parallel evaluation.
//
// Work is a pure function of the index; workers fill disjoint slots of a
// caller-owned buffer, and every reduction afterwards runs sequentially in
// index order. Results are therefore independent of the worker count.

#ifndef MLMC_PARALLEL_HPP
#define MLMC_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace mlmc {

/// Run body(i) for i in [0, n), split into contiguous chunks over `threads`
/// workers. threads <= 1 runs inline. The first exception thrown by any
/// worker is rethrown on the caller.
template <typename Body>
void parallel_for_index(std::size_t n, unsigned threads, Body&& body) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    const std::size_t chunk = (n + workers - 1) / workers;

    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&, lo, hi, w] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace mlmc

#endif  // MLMC_PARALLEL_HPP
