#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace vsz::detail {

// Runs body(i) for i in [0, count). Work is split into contiguous chunks, one
// per hardware thread, when `parallel` is set; body must only write state
// owned by index i so the result is independent of scheduling.
template <typename Body>
void parallel_for(std::size_t count, bool parallel, Body&& body) {
    const std::size_t workers =
        parallel ? std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count) : 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back([begin, end, &body] {
            for (std::size_t i = begin; i < end; ++i) body(i);
        });
    }
}

}  // namespace vsz::detail
