#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mzv::cli {

/// results[i] = task(i) for i < count, on up to `threads` workers. Output order is index order.
template <typename Result, typename Task>
std::vector<Result> parallel_map(std::size_t count, unsigned threads, Task task) {
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                results[i] = task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    const unsigned pool = threads <= 1 || count <= 1 ? 1 : static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(pool);
        for (unsigned t = 0; t < pool; ++t) {
            workers.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

}  // namespace mzv::cli
