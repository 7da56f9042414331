#pragma once

// Bounded worker pool for batch evaluation.  Work items write to disjoint
// slots, so results are bit-identical regardless of the thread count.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace dcmod {

inline unsigned max_threads() {
    static unsigned cap = [] {
        if (const char* env = std::getenv("DCMOD_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v > 0) return static_cast<unsigned>(v);
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? hw : 1u;
    }();
    return cap;
}

/// fn(i) is called exactly once for each i in [0, n); partitioning is static.
template <typename F>
void parallel_for(std::size_t n, F&& fn) {
    const unsigned nt = std::min<std::size_t>(max_threads(), n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace dcmod
