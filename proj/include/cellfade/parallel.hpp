#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace cellfade {

// Worker cap: min(hardware, CELLFADE_THREADS). Results must never depend on
// this value; tasks write only to their own index slot.
inline unsigned thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CELLFADE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1 && static_cast<unsigned long>(v) < hw) {
            hw = static_cast<unsigned>(v);
        }
    }
    return hw;
}

// Runs fn(i) for i in [0, n). Partitioning is by atomic work stealing, so
// fn must be safe to call concurrently and may only touch per-index state.
template <class F>
void parallel_for(std::size_t n, F&& fn) {
    const unsigned workers = thread_count();
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= n) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    pool.reserve(spawn - 1);
    for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

} // namespace cellfade
