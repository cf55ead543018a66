/*
   Copyright 2026 The wstack Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef WSTACK_PARALLEL_HPP
#define WSTACK_PARALLEL_HPP

#include <cstdint>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace wstack {

/// Worker count to use: `requested` if nonzero, else the WSTACK_WORKERS
/// environment variable, else the hardware concurrency (at least 1).
unsigned resolve_workers(unsigned requested = 0);

/// Splits [0, n) into `chunks` contiguous ranges and runs
/// fn(chunk_index, begin, end) for each on up to `workers` threads. Chunks
/// are handed out in index order; callers store per-chunk results and merge
/// them in index order so the outcome does not depend on scheduling.
/// The first exception thrown by any chunk is rethrown.
template <typename Fn>
void parallel_chunks(std::uint64_t n, std::uint64_t chunks, unsigned workers, Fn&& fn) {
    if (chunks == 0 || n == 0) return;
    if (chunks > n) chunks = n;
    auto range = [&](std::uint64_t c, std::uint64_t& b, std::uint64_t& e) {
        b = n * c / chunks;
        e = n * (c + 1) / chunks;
    };
    if (workers <= 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            std::uint64_t b, e;
            range(c, b, e);
            fn(c, b, e);
        }
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    std::uint64_t c = next.fetch_add(1);
                    if (c >= chunks) break;
                    std::uint64_t b, e;
                    range(c, b, e);
                    fn(c, b, e);
                }
            } catch (...) {
                errors[w] = std::current_exception();
                next.store(chunks);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace wstack

#endif  // WSTACK_PARALLEL_HPP
