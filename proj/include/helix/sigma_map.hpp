// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "helix/dna.hpp"
#include "helix/zmod11.hpp"

namespace helix {

/// The eleven trinucleotide blocks, indexed by the residue they encode.
/// None contains G and none ends in T.
inline constexpr std::array<std::string_view, 11> kTrinucleotideBlocks = {
    "CCC", "CCA", "CAC", "CAA", "ACC", "ACA", "AAC", "AAA", "TCC", "CTC", "TCA",
};

inline constexpr std::size_t kBlockLength = 3;

/// Residue encoded by a three-letter block, if it is one of the eleven.
std::optional<Z11> block_symbol(std::string_view block) noexcept;

/// True iff x has length divisible by three and every block is in the alphabet.
bool is_block_word(const DnaSeq& x) noexcept;

/// Block-wise image of a word; output length 3n.
DnaSeq phi(const Word& w);

/// Block-wise inverse. Throws ShapeError when the length is not a multiple of
/// three and NotInAlphabet (naming the 1-based block index) for a foreign block.
Word phi_inv(const DnaSeq& x);

/// 11x11 table of d(a, b) = Hamming distance between the blocks of a and b.
class InducedMetric {
public:
    /// Shared instance, built and checked (symmetry, zero diagonal, triangle
    /// inequality over all 11^3 triples) on first use.
    static const InducedMetric& instance();

    int operator()(Z11 a, Z11 b) const noexcept { return table_[a.value()][b.value()]; }
    const std::array<std::array<int, 11>, 11>& table() const noexcept { return table_; }

private:
    InducedMetric();
    std::array<std::array<int, 11>, 11> table_{};
};

/// Sum of per-symbol block distances. Throws ShapeError on length mismatch.
std::size_t induced_distance(const Word& x, const Word& y);

/// Run-breaking map: every maximal constant run of length >= threshold has
/// the bases at run offsets 4, 8, 12, ... (1-based within the run) replaced
/// by T. Length is preserved.
DnaSeq f_flip(const DnaSeq& x, std::size_t threshold = 4);

} // namespace helix
