#ifndef FRACPSEUDO_PARALLEL_HPP
#define FRACPSEUDO_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "fracpseudo/errors.hpp"

namespace fracpseudo {

// Upper bound on worker threads: FRACPSEUDO_THREADS when set (clamped to at
// most 256), hardware concurrency otherwise.  Work is always partitioned the
// same way regardless of this value; it only caps who runs in parallel.
inline int thread_budget() {
    if (const char* env = std::getenv("FRACPSEUDO_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw domain_error("FRACPSEUDO_THREADS must be a positive integer");
        return static_cast<int>(v < 256 ? v : 256);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0u ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, count) on up to thread_budget() workers.  Each task
// must write only to its own slot, so results cannot depend on the schedule.
// The first exception wins and is rethrown on the calling thread.
template <class F>
void parallel_for(long long count, F&& f) {
    if (count <= 0) return;
    const long long budget = thread_budget();
    const int workers = static_cast<int>(budget < count ? budget : count);
    if (workers <= 1) {
        for (long long i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<long long> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&]() {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            const long long i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                failed.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (std::thread& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}

#endif
