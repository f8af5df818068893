#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace zs {

inline int default_threads() {
    if (const char* env = std::getenv("ZS_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Index-sharded parallel loop; results written by index stay deterministic
// regardless of the worker count.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int nw = std::min<std::size_t>(threads, n);
    pool.reserve(nw);
    for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace zs
