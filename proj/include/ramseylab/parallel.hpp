#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ramsey {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items are
// handed out through a shared counter; the first exception is rethrown
// after all threads join.
template <typename Fn>
void parallel_for(int jobs, std::int64_t count, Fn&& fn) {
    if (count <= 0) return;
    if (jobs <= 1 || count == 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    int workers = static_cast<int>(std::min<std::int64_t>(jobs, count));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        threads.emplace_back([&] {
            while (!failed.load(std::memory_order_relaxed)) {
                std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ramsey
