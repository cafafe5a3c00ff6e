// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "helix/zmod11.hpp"

namespace helix {

/// mt19937_64 is fully specified by the standard; the distribution helpers
/// below avoid std::uniform_int_distribution, whose output is
/// implementation-defined, so seeded runs reproduce across toolchains.
using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - bound + 1) % bound;
    std::uint64_t v = rng();
    while (v < limit)
        v = rng();
    return bound == 0 ? v : v % bound;
}

inline Word random_word(Rng& rng, std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = Z11(static_cast<long long>(uniform_below(rng, 11)));
    return w;
}

} // namespace helix
