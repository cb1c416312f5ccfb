#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fhsforge {

inline unsigned default_thread_count()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into one contiguous slice per worker and runs
/// body(begin, end, worker) on each. The first exception thrown by any worker
/// is rethrown after all workers have joined.
template <typename Body>
void parallel_slices(std::uint64_t count, unsigned threads, Body&& body)
{
    const unsigned workers = static_cast<unsigned>(
        std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::max(1u, threads), count)));
    if (workers == 1) {
        body(std::uint64_t{0}, count, 0u);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = count * w / workers;
        const std::uint64_t end = count * (w + 1) / workers;
        pool.emplace_back([&, begin, end, w] {
            try {
                body(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace fhsforge
