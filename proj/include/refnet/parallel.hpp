#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace refnet {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(index) for index in [0, n) over a fixed pool, claiming work through
// an atomic cursor. Results must be written to per-index slots so the output
// does not depend on scheduling.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
    const int nthreads = resolve_threads(threads);
    if (nthreads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

// Splits [0, n) into contiguous chunks, one per worker, so each worker can
// set up its own workspace once. fn(begin, end, chunk_index, merge_mutex).
inline void parallel_chunks(
    std::size_t n, int threads,
    const std::function<void(std::size_t, std::size_t, std::size_t, std::mutex&)>& fn) {
    const int nthreads = resolve_threads(threads);
    std::mutex merge_mutex;
    if (nthreads <= 1 || n < 2) {
        fn(0, n, 0, merge_mutex);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(nthreads), n);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    const std::size_t step = (n + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = c * step;
        const std::size_t end = std::min(n, begin + step);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end, c] { fn(begin, end, c, merge_mutex); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace refnet
