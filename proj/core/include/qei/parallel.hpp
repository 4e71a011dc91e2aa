// parallel.hpp — deterministic trial-level parallelism; results land in
// trial-index order regardless of scheduling. QEL_THREADS caps the pool.
#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qei {

int max_threads();

template <typename T>
std::vector<T> run_batch(int n_trials, const std::function<T(int)>& fn) {
    std::vector<T> results(static_cast<std::size_t>(n_trials));
    int workers = std::min(max_threads(), n_trials);
    if (workers <= 1) {
        for (int i = 0; i < n_trials; ++i) results[static_cast<std::size_t>(i)] = fn(i);
        return results;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n_trials) return;
                try {
                    results[static_cast<std::size_t>(i)] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

} // namespace qei
