#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ordercone {

// Worker cap from ORDERCONE_THREADS; default 1.
inline std::size_t worker_count() {
    const char* env = std::getenv("ORDERCONE_THREADS");
    if (!env) return 1;
    long v = std::atol(env);
    if (v < 1) return 1;
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<std::size_t>(v) < hw ? static_cast<std::size_t>(v) : hw;
}

// Runs fn(i) for i in [0, n). Work items must be independent; callers are
// responsible for a deterministic merge of whatever the items produce. The
// first exception thrown by an item is rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = worker_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t count = workers < n ? workers : n;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < count; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += count) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace ordercone
