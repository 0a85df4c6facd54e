// parallel.hpp: striped worker pool for sweeps. Work is split into
// contiguous index blocks, one per worker, and results are merged in block
// order by the caller, so output is identical for any worker count.
#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

#include "mgonal/common.hpp"

namespace mgonal {

// Runs fn(stripe, begin, end) over a partition of [0, total) into at most
// `workers` contiguous stripes. fn must only touch state owned by its stripe.
inline void run_striped(i64 total, int workers,
                        const std::function<void(i64, i64, i64)>& fn) {
    require(workers >= 1, "worker count must be at least 1");
    if (total <= 0) return;
    const i64 n_stripes = std::min<i64>(workers, total);
    const i64 chunk = (total + n_stripes - 1) / n_stripes;
    if (n_stripes == 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_stripes));
    for (i64 s = 0; s < n_stripes; ++s) {
        const i64 lo = s * chunk;
        const i64 hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, s, lo, hi] { fn(s, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace mgonal
