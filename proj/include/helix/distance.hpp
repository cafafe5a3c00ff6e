// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "helix/dna.hpp"
#include "helix/zmod11.hpp"

namespace helix {

/// How the second member of a pair is transformed before comparison.
enum class PairMode { Direct, Reverse, ReverseComplement };

struct PairMin {
    std::size_t value = 0;
    std::size_t first = 0;  ///< index into the input span
    std::size_t second = 0; ///< index into the input span
    bool found = false;
};

/// Minimum Hamming distance over distinct pairs (Direct), or over all pairs
/// x, y (x == y allowed) of d(x, T(y)) with x != T(y), where T is reversal or
/// reverse complement. Both d(x, y^r) and d(x, y^rc) are symmetric in x and
/// y, so unordered pairs suffice. Ties resolve to the lexicographically
/// smallest (first, second). Scans are split over workers by first index and
/// stop early per pair once the running minimum is reached.
PairMin min_pairwise_hamming(std::span<const DnaSeq> seqs, PairMode mode, unsigned threads = 0);

/// Minimum induced distance over distinct pairs of words, same tie-break.
PairMin min_pairwise_induced(std::span<const Word> words, unsigned threads = 0);

/// Number of unordered pairs (including the diagonal when `with_diagonal`).
std::uint64_t pair_count(std::uint64_t n, bool with_diagonal) noexcept;

} // namespace helix
