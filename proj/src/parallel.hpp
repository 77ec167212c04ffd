#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace dpcolor::detail {

/// Splits [0, total) into contiguous chunks, one per worker, and calls
/// fn(worker, begin, end) for each. Chunk boundaries depend only on `total`
/// and `workers`. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_chunks(std::uint64_t total, unsigned workers, Fn&& fn) {
    workers = std::max(1U, workers);
    if (workers == 1 || total < 2) {
        fn(0U, std::uint64_t{0}, total);
        return;
    }
    const std::uint64_t w = std::min<std::uint64_t>(workers, total);
    std::vector<std::exception_ptr> errors(w);
    std::vector<std::thread> threads;
    for (std::uint64_t i = 0; i < w; ++i) {
        const std::uint64_t begin = total * i / w;
        const std::uint64_t end = total * (i + 1) / w;
        threads.emplace_back([&, i, begin, end] {
            try {
                fn(static_cast<unsigned>(i), begin, end);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace dpcolor::detail
