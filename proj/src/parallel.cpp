// SPDX-License-Identifier: Apache-2.0

#include "helix/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>

namespace helix {

unsigned default_thread_count() {
    if (const char* env = std::getenv("HELIX_THREADS")) {
        try {
            long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // fall through to hardware concurrency
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t chunks, unsigned threads,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
    if (end <= begin || chunks == 0)
        return;
    const std::uint64_t total = end - begin;
    chunks = static_cast<std::size_t>(std::min<std::uint64_t>(chunks, total));
    auto bounds = [&](std::size_t c) { return begin + total * c / chunks; };

    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
    if (threads == 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            fn(c, bounds(c), bounds(c + 1));
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < chunks; c = next++) {
                try {
                    fn(c, bounds(c), bounds(c + 1));
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace helix
