#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace qcol {

/// Run fn(i) for i in [0, count) across a small thread pool. Work items must
/// be independent; exceptions are rethrown on the calling thread (first one
/// wins, by index).
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    const unsigned hw = std::thread::hardware_concurrency();
    const unsigned workers = std::min<size_t>(hw == 0 ? 1 : hw, count);
    if (workers < 2) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace qcol
