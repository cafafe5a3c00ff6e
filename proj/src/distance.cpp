// SPDX-License-Identifier: Apache-2.0

#include "helix/distance.hpp"

#include <atomic>
#include <limits>
#include <vector>

#include "helix/parallel.hpp"
#include "helix/sigma_map.hpp"

namespace helix {

std::uint64_t pair_count(std::uint64_t n, bool with_diagonal) noexcept {
    return with_diagonal ? n * (n + 1) / 2 : (n < 2 ? 0 : n * (n - 1) / 2);
}

namespace {

bool better(const PairMin& a, const PairMin& b) noexcept {
    if (!a.found)
        return false;
    if (!b.found)
        return true;
    if (a.value != b.value)
        return a.value < b.value;
    if (a.first != b.first)
        return a.first < b.first;
    return a.second < b.second;
}

// Generic triangle scan. dist(i, j, limit) returns the exact distance when it
// is <= limit and any value > limit otherwise. Pairs at distance 0 are
// skipped (they are identical, or x == T(y) in the transformed modes).
template <typename DistFn>
PairMin scan_triangle(std::size_t n, bool with_diagonal, unsigned threads, DistFn&& dist) {
    if (threads == 0)
        threads = default_thread_count();
    std::atomic<std::size_t> global_best{std::numeric_limits<std::size_t>::max()};
    const std::size_t chunks = std::min<std::size_t>(n, 512);
    std::vector<PairMin> results(chunks);
    parallel_chunks(0, n, chunks, threads, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        PairMin local;
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = with_diagonal ? i : i + 1; j < n; ++j) {
                const std::size_t limit = std::min(global_best.load(std::memory_order_relaxed),
                                                   local.found ? local.value : std::numeric_limits<std::size_t>::max());
                const std::size_t d = dist(i, j, limit);
                if (d == 0 || d > limit)
                    continue;
                PairMin candidate{d, i, j, true};
                if (better(candidate, local)) {
                    local = candidate;
                    std::size_t seen = global_best.load(std::memory_order_relaxed);
                    while (d < seen && !global_best.compare_exchange_weak(seen, d, std::memory_order_relaxed)) {
                    }
                }
            }
        results[c] = local;
    });
    PairMin best;
    for (const auto& r : results)
        if (better(r, best))
            best = r;
    return best;
}

} // namespace

PairMin min_pairwise_hamming(std::span<const DnaSeq> seqs, PairMode mode, unsigned threads) {
    std::vector<DnaSeq> transformed;
    if (mode != PairMode::Direct) {
        transformed.reserve(seqs.size());
        for (const auto& s : seqs)
            transformed.push_back(mode == PairMode::Reverse ? reverse(s) : reverse_complement(s));
    }
    for (const auto& s : seqs)
        if (s.size() != seqs.front().size())
            fail(ErrorCode::ShapeError, "pairwise scan over sequences of different lengths");
    const std::span<const DnaSeq> others = mode == PairMode::Direct ? seqs : std::span<const DnaSeq>(transformed);
    return scan_triangle(seqs.size(), mode != PairMode::Direct, threads,
                         [&](std::size_t i, std::size_t j, std::size_t limit) {
                             const std::string& a = seqs[i].str();
                             const std::string& b = others[j].str();
                             std::size_t d = 0;
                             for (std::size_t t = 0; t < a.size(); ++t) {
                                 d += a[t] != b[t] ? 1 : 0;
                                 if (d > limit)
                                     return d;
                             }
                             return d;
                         });
}

PairMin min_pairwise_induced(std::span<const Word> words, unsigned threads) {
    for (const auto& w : words)
        if (w.size() != words.front().size())
            fail(ErrorCode::ShapeError, "pairwise scan over words of different lengths");
    const auto& table = InducedMetric::instance().table();
    return scan_triangle(words.size(), false, threads, [&](std::size_t i, std::size_t j, std::size_t limit) {
        auto a = words[i].symbols();
        auto b = words[j].symbols();
        std::size_t d = 0;
        for (std::size_t t = 0; t < a.size(); ++t) {
            d += static_cast<std::size_t>(table[a[t].value()][b[t].value()]);
            if (d > limit)
                return d;
        }
        return d;
    });
}

} // namespace helix
