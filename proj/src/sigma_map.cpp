// SPDX-License-Identifier: Apache-2.0

#include "helix/sigma_map.hpp"

#include <stdexcept>
#include <string>

namespace helix {

std::optional<Z11> block_symbol(std::string_view block) noexcept {
    for (std::size_t i = 0; i < kTrinucleotideBlocks.size(); ++i)
        if (kTrinucleotideBlocks[i] == block)
            return Z11(static_cast<long long>(i));
    return std::nullopt;
}

bool is_block_word(const DnaSeq& x) noexcept {
    if (x.size() % kBlockLength != 0)
        return false;
    for (std::size_t i = 0; i < x.size(); i += kBlockLength)
        if (!block_symbol(x.view().substr(i, kBlockLength)))
            return false;
    return true;
}

DnaSeq phi(const Word& w) {
    std::string out;
    out.reserve(w.size() * kBlockLength);
    for (Z11 s : w)
        out += kTrinucleotideBlocks[static_cast<std::size_t>(s.value())];
    return DnaSeq::from_bases_unchecked(std::move(out));
}

Word phi_inv(const DnaSeq& x) {
    if (x.size() % kBlockLength != 0)
        fail(ErrorCode::ShapeError, "sequence length " + std::to_string(x.size()) + " is not a multiple of 3");
    Word out(x.size() / kBlockLength);
    for (std::size_t b = 0; b < out.size(); ++b) {
        auto block = x.view().substr(b * kBlockLength, kBlockLength);
        auto sym = block_symbol(block);
        if (!sym)
            fail(ErrorCode::NotInAlphabet,
                 "block " + std::to_string(b + 1) + " (" + std::string(block) + ") is not in the alphabet");
        out[b] = *sym;
    }
    return out;
}

InducedMetric::InducedMetric() {
    for (std::size_t a = 0; a < 11; ++a)
        for (std::size_t b = 0; b < 11; ++b) {
            int d = 0;
            for (std::size_t t = 0; t < kBlockLength; ++t)
                d += kTrinucleotideBlocks[a][t] != kTrinucleotideBlocks[b][t] ? 1 : 0;
            table_[a][b] = d;
        }
    for (std::size_t a = 0; a < 11; ++a) {
        if (table_[a][a] != 0)
            throw std::logic_error("induced metric: nonzero diagonal");
        for (std::size_t b = 0; b < 11; ++b) {
            if (table_[a][b] != table_[b][a] || (a != b && table_[a][b] == 0))
                throw std::logic_error("induced metric: not a symmetric separating table");
            for (std::size_t c = 0; c < 11; ++c)
                if (table_[a][c] > table_[a][b] + table_[b][c])
                    throw std::logic_error("induced metric: triangle inequality fails");
        }
    }
}

const InducedMetric& InducedMetric::instance() {
    static const InducedMetric metric;
    return metric;
}

std::size_t induced_distance(const Word& x, const Word& y) {
    if (x.size() != y.size())
        fail(ErrorCode::ShapeError, "word length mismatch: " + std::to_string(x.size()) + " vs " +
                                        std::to_string(y.size()));
    const auto& d = InducedMetric::instance();
    std::size_t sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        sum += static_cast<std::size_t>(d(x[i], y[i]));
    return sum;
}

DnaSeq f_flip(const DnaSeq& x, std::size_t threshold) {
    std::string out = x.str();
    const std::size_t n = out.size();
    std::size_t start = 0;
    while (start < n) {
        std::size_t end = start;
        while (end < n && x.char_at(end) == x.char_at(start))
            ++end;
        if (end - start >= threshold)
            for (std::size_t offset = 4; offset <= end - start; offset += 4)
                out[start + offset - 1] = 'T';
        start = end;
    }
    return DnaSeq::from_bases_unchecked(std::move(out));
}

} // namespace helix
