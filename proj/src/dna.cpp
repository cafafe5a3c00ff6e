// SPDX-License-Identifier: Apache-2.0

#include "helix/dna.hpp"

#include <algorithm>

namespace helix {

Base base_from_char(char c) {
    switch (c) {
    case 'A': case 'a': return Base::A;
    case 'C': case 'c': return Base::C;
    case 'G': case 'g': return Base::G;
    case 'T': case 't': return Base::T;
    default: break;
    }
    fail(ErrorCode::ParseError, std::string("invalid nucleotide '") + c + "'");
}

DnaSeq::DnaSeq(std::string_view text) {
    bases_.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        switch (c) {
        case 'A': case 'a': bases_.push_back('A'); break;
        case 'C': case 'c': bases_.push_back('C'); break;
        case 'G': case 'g': bases_.push_back('G'); break;
        case 'T': case 't': bases_.push_back('T'); break;
        default:
            fail(ErrorCode::ParseError, std::string("invalid nucleotide '") + c + "' at position " +
                                            std::to_string(i + 1));
        }
    }
}

namespace {

char complement_char(char c) noexcept {
    switch (c) {
    case 'A': return 'T';
    case 'T': return 'A';
    case 'C': return 'G';
    default: return 'C';
    }
}

} // namespace

DnaSeq complement(const DnaSeq& x) {
    std::string out(x.str());
    std::transform(out.begin(), out.end(), out.begin(), complement_char);
    return DnaSeq::from_bases_unchecked(std::move(out));
}

DnaSeq reverse(const DnaSeq& x) {
    return DnaSeq::from_bases_unchecked(std::string(x.str().rbegin(), x.str().rend()));
}

DnaSeq reverse_complement(const DnaSeq& x) {
    std::string out(x.str().rbegin(), x.str().rend());
    std::transform(out.begin(), out.end(), out.begin(), complement_char);
    return DnaSeq::from_bases_unchecked(std::move(out));
}

std::size_t hamming_distance(const DnaSeq& x, const DnaSeq& y) {
    if (x.size() != y.size())
        fail(ErrorCode::ShapeError, "sequence length mismatch: " + std::to_string(x.size()) + " vs " +
                                        std::to_string(y.size()));
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        d += x.char_at(i) != y.char_at(i) ? 1 : 0;
    return d;
}

GcContent gc_content(const DnaSeq& x) {
    if (x.empty())
        fail(ErrorCode::EmptyInput, "GC content of an empty sequence");
    auto gc = std::count_if(x.str().begin(), x.str().end(), [](char c) { return c == 'G' || c == 'C'; });
    return {static_cast<std::size_t>(gc), x.size()};
}

Run max_homopolymer_run(const DnaSeq& x) {
    if (x.empty())
        fail(ErrorCode::EmptyInput, "homopolymer run of an empty sequence");
    Run best{1, 0, x[0]};
    std::size_t start = 0;
    for (std::size_t i = 1; i <= x.size(); ++i) {
        if (i < x.size() && x.char_at(i) == x.char_at(start))
            continue;
        if (i - start > best.length)
            best = {i - start, start, x[start]};
        start = i;
    }
    return best;
}

// --- secondary complements -------------------------------------------------

SecondaryComplementSet::SecondaryComplementSet(DnaSeq source) : source_(std::move(source)) {
    choices_ = static_cast<std::size_t>(
        std::count_if(source_.str().begin(), source_.str().end(), [](char c) { return c == 'T' || c == 'G'; }));
}

std::uint64_t SecondaryComplementSet::size() const {
    if (choices_ >= 64)
        fail(ErrorCode::BadArgument, "secondary complement set too large to count in 64 bits");
    return std::uint64_t{1} << choices_;
}

bool SecondaryComplementSet::contains(const DnaSeq& y) const noexcept {
    const std::size_t n = source_.size();
    if (y.size() != n)
        return false;
    for (std::size_t t = 0; t < n; ++t)
        if (!is_sc_pair(source_[t], y[n - 1 - t]))
            return false;
    return true;
}

DnaSeq SecondaryComplementSet::at(std::uint64_t index) const {
    const std::size_t n = source_.size();
    std::string out(n, 'A');
    std::size_t bit = 0;
    for (std::size_t t = 0; t < n; ++t) {
        char partner = 'A';
        switch (source_.char_at(t)) {
        case 'A': partner = 'T'; break;
        case 'C': partner = 'G'; break;
        case 'T': partner = ((index >> bit++) & 1U) ? 'G' : 'A'; break;
        case 'G': partner = ((index >> bit++) & 1U) ? 'T' : 'C'; break;
        default: break;
        }
        out[n - 1 - t] = partner;
    }
    return DnaSeq::from_bases_unchecked(std::move(out));
}

} // namespace helix
