// SPDX-License-Identifier: Apache-2.0
//
// swfde - spherical-wave antenna de-embedding from near-field surface dumps
// Copyright (C) 2026 the swfde authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "swfde/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace swfde {

int worker_thread_count() {
    if (const char* env = std::getenv("SWF_DEEMBED_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    const std::size_t nblocks = block_count(n, block_size);
    const int want = worker_thread_count();
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(want), nblocks);

    auto run_block = [&](std::size_t bi) {
        const std::size_t begin = bi * block_size;
        const std::size_t end = std::min(n, begin + block_size);
        fn(bi, begin, end);
    };

    if (nthreads <= 1) {
        for (std::size_t bi = 0; bi < nblocks; ++bi) run_block(bi);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t bi = next.fetch_add(1); bi < nblocks; bi = next.fetch_add(1))
                run_block(bi);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace swfde
