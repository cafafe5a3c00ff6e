// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace helix {

/// Worker count: HELIX_THREADS if set and positive, otherwise the hardware
/// concurrency (at least 1).
unsigned default_thread_count();

/// Splits [begin, end) into `chunks` contiguous ranges and runs
/// fn(chunk_index, lo, hi) for each on up to `threads` workers. Results are
/// meant to be written per chunk and reduced by the caller in chunk order,
/// which keeps reductions deterministic whatever the thread count.
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t chunks, unsigned threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

} // namespace helix
