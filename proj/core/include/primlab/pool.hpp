#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace primlab {

/// Runs fn(i) for i in [0, task_count) on up to `jobs` threads and
/// returns the results in index order, so the merge is deterministic for
/// any pool size. fn must be safe to call concurrently. The lowest-index
/// worker exception, if any, is rethrown after the pool drains.
template <typename T, typename Fn>
std::vector<T> parallel_indexed(unsigned jobs, std::size_t task_count, Fn fn) {
    std::vector<T> results(task_count);
    if (task_count == 0) return results;
    if (jobs <= 1 || task_count == 1) {
        for (std::size_t i = 0; i < task_count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_index = task_count;
    std::exception_ptr error;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= task_count) return;
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };
    const unsigned n_threads = static_cast<unsigned>(
        std::min<std::size_t>(jobs, task_count));
    std::vector<std::thread> threads;
    threads.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
    return results;
}

inline unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace primlab
