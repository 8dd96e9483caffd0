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

#pragma once

#include <cstddef>
#include <functional>

namespace swfde {

// Worker cap: SWF_DEEMBED_THREADS (positive integer) if set, otherwise the
// hardware concurrency.
int worker_thread_count();

// Runs fn(block_index, begin, end) over fixed-size blocks of [0, n). Block
// boundaries depend only on n and block_size, never on the thread count, so
// reductions that (a) accumulate serially within a block and (b) combine the
// per-block partials in block order are bitwise reproducible under any
// parallelism.
void parallel_blocks(std::size_t n, std::size_t block_size,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

inline std::size_t block_count(std::size_t n, std::size_t block_size) {
    return (n + block_size - 1) / block_size;
}

}  // namespace swfde
