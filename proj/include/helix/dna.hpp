// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "helix/error.hpp"

namespace helix {

enum class Base : std::uint8_t { A = 0, C = 1, G = 2, T = 3 };

constexpr Base complement(Base b) noexcept {
    switch (b) {
    case Base::A: return Base::T;
    case Base::C: return Base::G;
    case Base::G: return Base::C;
    case Base::T: return Base::A;
    }
    return b;
}

constexpr char to_char(Base b) noexcept { return "ACGT"[static_cast<int>(b)]; }

/// Maps A/C/G/T (either case) to a base. Throws ParseError otherwise.
Base base_from_char(char c);

/// True iff (a, b) can pair with negative interaction energy: Watson-Crick
/// pairs plus the G-T wobble.
constexpr bool is_sc_pair(Base a, Base b) noexcept {
    using enum Base;
    return (a == C && b == G) || (a == G && b == C) || (a == A && b == T) || (a == T && b == A) ||
           (a == T && b == G) || (a == G && b == T);
}

/// Immutable nucleotide sequence. Stored as uppercase ASCII; all
/// user-visible positions are 1-based.
class DnaSeq {
public:
    DnaSeq() = default;
    /// Accepts upper or lower case ACGT; anything else is a ParseError.
    explicit DnaSeq(std::string_view text);

    static DnaSeq from_bases_unchecked(std::string bases) {
        DnaSeq s;
        s.bases_ = std::move(bases);
        return s;
    }

    std::size_t size() const noexcept { return bases_.size(); }
    bool empty() const noexcept { return bases_.empty(); }
    /// 0-based access.
    Base operator[](std::size_t i) const noexcept { return base_of(bases_[i]); }
    char char_at(std::size_t i) const noexcept { return bases_[i]; }
    const std::string& str() const noexcept { return bases_; }
    std::string_view view() const noexcept { return bases_; }

    DnaSeq substr(std::size_t pos, std::size_t len) const { return from_bases_unchecked(bases_.substr(pos, len)); }
    DnaSeq operator+(const DnaSeq& other) const { return from_bases_unchecked(bases_ + other.bases_); }

    friend bool operator==(const DnaSeq&, const DnaSeq&) = default;
    friend auto operator<=>(const DnaSeq&, const DnaSeq&) = default;

private:
    static constexpr Base base_of(char c) noexcept {
        switch (c) {
        case 'A': return Base::A;
        case 'C': return Base::C;
        case 'G': return Base::G;
        default: return Base::T;
        }
    }

    std::string bases_;
};

DnaSeq complement(const DnaSeq& x);
DnaSeq reverse(const DnaSeq& x);
DnaSeq reverse_complement(const DnaSeq& x);

/// Throws ShapeError on length mismatch.
std::size_t hamming_distance(const DnaSeq& x, const DnaSeq& y);

struct GcContent {
    std::size_t gc = 0;
    std::size_t length = 0;
    double value() const noexcept { return length == 0 ? 0.0 : static_cast<double>(gc) / static_cast<double>(length); }
};

/// Throws EmptyInput for the empty sequence.
GcContent gc_content(const DnaSeq& x);

struct Run {
    std::size_t length = 0;
    std::size_t start = 0; ///< 0-based start of the first longest run
    Base base = Base::A;
};

/// Longest maximal constant substring; the earliest one wins ties.
/// Throws EmptyInput for the empty sequence.
Run max_homopolymer_run(const DnaSeq& x);

/// The set of secondary complements of x, kept implicit: its size is
/// 2^(#T + #G). Members are indexed by a bit mask, one bit per ambiguous
/// (T or G) position of x, scanning x left to right.
class SecondaryComplementSet {
public:
    explicit SecondaryComplementSet(DnaSeq source);

    /// Number of ambiguous positions in the source; size() = 2^choices().
    std::size_t choices() const noexcept { return choices_; }
    /// Throws BadArgument when the size does not fit in 64 bits.
    std::uint64_t size() const;

    bool contains(const DnaSeq& y) const noexcept;
    /// Member selected by `index` in [0, size()).
    DnaSeq at(std::uint64_t index) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        const std::uint64_t n = size();
        for (std::uint64_t i = 0; i < n; ++i)
            fn(at(i));
    }

private:
    DnaSeq source_;
    std::size_t choices_ = 0;
};

inline SecondaryComplementSet secondary_complements(const DnaSeq& x) { return SecondaryComplementSet(x); }

} // namespace helix
