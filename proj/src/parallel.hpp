// Copyright 2026 The uur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace uur::detail {

/// Runs body(begin, end, chunk) over contiguous chunks of [0, count) on worker
/// threads. Chunk boundaries depend only on `count` and `chunks`, never on
/// the thread count, so per-chunk results can be merged deterministically.
/// The first exception thrown by any chunk is rethrown.
template <class Body>
void parallel_chunks(std::size_t count, std::size_t chunks, Body &&body) {
    if (count == 0) {
        return;
    }
    chunks = std::clamp<std::size_t>(chunks, 1, count);
    const std::size_t workers =
        std::min<std::size_t>(chunks, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::exception_ptr> errors(chunks);

    auto run_chunk = [&](std::size_t c) {
        const std::size_t begin = count * c / chunks;
        const std::size_t end = count * (c + 1) / chunks;
        try {
            body(begin, end, c);
        } catch (...) {
            errors[c] = std::current_exception();
        }
    };

    if (workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t c = w; c < chunks; c += workers) {
                    run_chunk(c);
                }
            });
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace uur::detail
