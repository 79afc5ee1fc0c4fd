#pragma once

#include <cstdlib>
#include <future>
#include <vector>

namespace zerocert {

// Thread cap from ZEROCERT_THREADS (default 1).
inline int env_threads() {
    const char* s = std::getenv("ZEROCERT_THREADS");
    if (!s) return 1;
    const int n = std::atoi(s);
    return n > 0 ? n : 1;
}

// Chunked reduction with fixed chunk boundaries: partials are computed per
// chunk (possibly concurrently) and always combined in index order, so the
// result is bit-identical for any thread count.
template <typename T, typename ChunkFn>
T chunked_sum(std::size_t n, const T& zero, ChunkFn chunk_fn) {
    constexpr std::size_t kChunk = 512;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    const int threads = env_threads();
    std::vector<T> partial(chunks, zero);
    if (threads <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            partial[c] = chunk_fn(c * kChunk, std::min(n, (c + 1) * kChunk));
    } else {
        std::vector<std::future<void>> futs;
        for (int t = 0; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, [&, t] {
                for (std::size_t c = t; c < chunks; c += threads)
                    partial[c] = chunk_fn(c * kChunk, std::min(n, (c + 1) * kChunk));
            }));
        for (auto& f : futs) f.get();
    }
    T total = zero;
    for (const auto& p : partial) total = total + p;
    return total;
}

}  // namespace zerocert
