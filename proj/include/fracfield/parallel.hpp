#pragma once

#include <algorithm>
#include <cstdlib>
#include <cstddef>
#include <thread>
#include <vector>

namespace fracfield {

/// Worker cap: FRACFIELD_THREADS if set, else hardware concurrency.
inline unsigned max_threads() {
    static const unsigned cap = [] {
        unsigned hw = std::thread::hardware_concurrency();
        if (hw == 0) hw = 1;
        if (const char* env = std::getenv("FRACFIELD_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
            return 1u;
        }
        return hw;
    }();
    return cap;
}

/// Run f(i) for i in [0, count). Splits into contiguous chunks when the
/// estimated work is large enough to pay for thread startup. Results must
/// not depend on the partitioning (callers only write disjoint outputs).
template <class F>
void parallel_for(std::size_t count, std::size_t work_per_item, F&& f) {
    const unsigned cap = max_threads();
    const std::size_t total = count * std::max<std::size_t>(work_per_item, 1);
    if (cap <= 1 || count < 2 || total < (1u << 20)) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(cap, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace fracfield
