// Copyright 2026 The PTIM Decoders Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PTIM_PARALLEL_H
#define PTIM_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ptim {

/// Calls body(i) for every i in [0, n) on up to `workers` threads. Indices are
/// handed out in small chunks; callers write results into per-index slots, so
/// the outcome never depends on scheduling. The first exception thrown by any
/// call is rethrown after all threads have stopped.
template <typename Body>
void parallel_for(size_t n, int workers, Body &&body) {
    constexpr size_t kChunk = 8;
    size_t threads = std::min<size_t>(std::max(workers, 1), (n + kChunk - 1) / kChunk);
    if (threads <= 1) {
        for (size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&]() {
        while (!failed.load(std::memory_order_relaxed)) {
            size_t begin = next.fetch_add(kChunk);
            if (begin >= n) {
                return;
            }
            size_t end = std::min(n, begin + kChunk);
            try {
                for (size_t i = begin; i < end; ++i) {
                    body(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (size_t k = 1; k < threads; ++k) {
        pool.emplace_back(run);
    }
    run();
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace ptim

#endif  // PTIM_PARALLEL_H
