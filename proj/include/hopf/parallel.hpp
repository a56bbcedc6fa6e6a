#pragma once

// Deterministic fork/join over an index range. Work is cut into contiguous
// slices, one per worker, and partial results are combined in slice order.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hopf {

/// Worker count: HOPF_JOBS if set to a positive integer, else the hardware count.
inline unsigned default_jobs() {
    if (const char* env = std::getenv("HOPF_JOBS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/**
 * Applies `body(begin, end) -> R` to `jobs` contiguous slices of [0, count) and
 * folds the results left to right with `combine`. jobs = 0 selects default_jobs().
 * An exception in any worker is rethrown after all workers have joined.
 */
template <class R, class Body, class Combine>
R parallel_reduce(std::size_t count, unsigned jobs, R init, Body body, Combine combine) {
    if (jobs == 0) jobs = default_jobs();
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
    if (jobs <= 1) return combine(std::move(init), body(std::size_t{0}, count));

    std::vector<R> partial(jobs, init);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    const std::size_t chunk = count / jobs, extra = count % jobs;
    std::size_t begin = 0;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t end = begin + chunk + (w < extra ? 1 : 0);
        workers.emplace_back([&, w, begin, end] {
            try {
                partial[w] = body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    R acc = std::move(init);
    for (auto& part : partial) acc = combine(std::move(acc), std::move(part));
    return acc;
}

}  // namespace hopf
