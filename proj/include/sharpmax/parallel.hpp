#pragma once
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sharpmax {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs chunk(i) for i in [0, chunks) on a small pool and folds the results
// in chunk order, so the reduction is schedule-independent.
template <class Result, class ChunkFn, class MergeFn>
Result parallel_reduce(std::size_t chunks, int jobs, ChunkFn chunk, Result init, MergeFn merge) {
    jobs = resolve_jobs(jobs);
    std::vector<Result> results(chunks);
    if (jobs <= 1 || chunks <= 1) {
        for (std::size_t i = 0; i < chunks; ++i) results[i] = chunk(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), chunks);
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= chunks) break;
                    results[i] = chunk(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    Result acc = std::move(init);
    for (std::size_t i = 0; i < chunks; ++i) acc = merge(std::move(acc), std::move(results[i]));
    return acc;
}

}  // namespace sharpmax
