#pragma once

// Chunked worker parallelism for pure index-wise predicates. The reduction is
// a plain conjunction, so the result does not depend on the schedule.

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gbent {

template <typename Fn>
bool parallel_all_of(size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (size_t i = 0; i < count; ++i)
            if (!fn(i))
                return false;
        return true;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<size_t>(threads, count));
    std::atomic<bool> ok{true};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count && ok.load(std::memory_order_relaxed); i += workers)
                if (!fn(i))
                    ok.store(false, std::memory_order_relaxed);
        });
    }
    for (auto& th : pool)
        th.join();
    return ok.load();
}

} // namespace gbent
