#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace ilab {

// ILAB_THREADS caps worker threads; default is the hardware count.
inline std::size_t max_threads() {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ILAB_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return std::min<std::size_t>(hw, static_cast<std::size_t>(v));
    }
    return hw;
}

// Runs body(i) for i in [0, n).  Work items must be independent; results are
// typically written into preallocated slots so the outcome does not depend on
// the thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    std::size_t threads = std::min(max_threads(), n);
    if (threads <= 1 || n < 4) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        futs.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < n; i += threads) body(i);
        }));
    }
    for (auto& f : futs) f.get();
}

}  // namespace ilab
