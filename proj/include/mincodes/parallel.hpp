#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace mincodes {

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? int(hw) : 1;
}

// Applies fn to every index and collects results in input order. Work is
// striped over the workers; fn must be pure.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn&& fn) {
    std::vector<Result> out(count);
    const int workers = std::min<int>(resolve_jobs(jobs), int(count ? count : 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = std::size_t(w); i < count; i += std::size_t(workers))
                out[i] = fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
    return out;
}

}  // namespace mincodes
