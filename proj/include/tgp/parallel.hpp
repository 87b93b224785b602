#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace tgp {

struct IndexedFailure {
    std::size_t index;
    std::exception_ptr error;
};

// Runs task(i) for i in [0, n) on up to `workers` threads (the caller's thread
// included). Indices are claimed in increasing order. After the first failure
// no new indices are claimed; returns the failure with the smallest index, if any.
template <typename Task>
std::optional<IndexedFailure> parallel_for(std::size_t n, unsigned workers, Task&& task)
{
    std::atomic<std::size_t> next { 0 };
    std::atomic<bool> failed { false };
    std::mutex mutex;
    std::optional<IndexedFailure> first;

    auto loop = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!first || i < first->index) {
                    first = IndexedFailure { i, std::current_exception() };
                }
                failed.store(true);
            }
        }
    };

    const auto threads = static_cast<std::size_t>(std::max(1U, workers));
    const std::size_t extra = std::min(threads, n) > 0 ? std::min(threads, n) - 1 : 0;
    {
        std::vector<std::jthread> pool;
        pool.reserve(extra);
        for (std::size_t t = 0; t < extra; ++t) {
            pool.emplace_back(loop);
        }
        loop();
    }
    return first;
}

} // namespace tgp
