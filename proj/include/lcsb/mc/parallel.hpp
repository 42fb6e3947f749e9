#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace lcsb {

// Environment variable consulted for the default worker count.
inline constexpr const char* kWorkersEnv = "LCSB_WORKERS";

int default_workers();

// 0 or negative means "use the default".
int resolve_workers(int requested);

// Calls body(i) for every i in [0, count). Indices are split into contiguous
// blocks, one per worker; callers write results into slot i so the outcome
// never depends on the worker count.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
    const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(resolve_workers(workers)),
                                                std::max<std::size_t>(count, 1));
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t begin = count * t / w;
        const std::size_t end = count * (t + 1) / w;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace lcsb
