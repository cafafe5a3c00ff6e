// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "helix/zmod11.hpp"

namespace helix {

struct Family1Tag {
    int k = 2;
};
struct HammingTag {
    int r = 2;
};
struct ReedSolomonTag {
    int delta = 3;
    int alpha = 2;
    int a = 0;
};
struct CustomTag {};

using FamilyTag = std::variant<Family1Tag, HammingTag, ReedSolomonTag, CustomTag>;

/// Canonical spec string: "family1:k=3", "hamming:r=2", "rs:delta=3,alpha=2,a=0".
std::string to_string(const FamilyTag& tag);

/// Parses a code spec string. Throws ParseError or BadArgument.
FamilyTag parse_family(std::string_view spec);

/// Linear code over Z11. The generator matrix is optional because codes such
/// as the r=5 Hamming code are too large to store densely; such codes carry a
/// parity-check matrix with an identity sub-matrix and encode systematically.
class LinearCode {
public:
    LinearCode(FamilyTag family, std::size_t n, std::size_t k, std::optional<Matrix> generator,
               std::optional<Matrix> parity_check);

    const FamilyTag& family() const noexcept { return family_; }
    std::size_t length() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return k_; }
    const std::optional<Matrix>& generator() const noexcept { return g_; }
    const std::optional<Matrix>& parity_check() const noexcept { return h_; }

    /// msg * G, or the systematic encoding through H when G is not stored.
    Word encode(const Word& msg) const;

    /// Positions carrying the message in systematic encoding (H-only codes).
    const std::vector<std::size_t>& information_positions() const noexcept { return info_positions_; }

private:
    FamilyTag family_;
    std::size_t n_;
    std::size_t k_;
    std::optional<Matrix> g_;
    std::optional<Matrix> h_;
    std::vector<std::size_t> info_positions_;
    std::vector<std::size_t> check_positions_; ///< column of H equal to e_i, per row i
};

/// Builds whichever family the tag names. Throws as the individual builders do.
LinearCode build_code(const FamilyTag& tag);

/// Length 4^(k-1), dimension k, 2 <= k <= 5.
LinearCode family1(int k);

struct HammingLimits {
    /// Largest parity-check matrix (entries) that will be built.
    std::uint64_t max_parity_entries = 16'000'000;
    /// Largest generator matrix (entries) stored densely; larger codes keep H only.
    std::uint64_t max_generator_entries = 4'000'000;
};

/// q-ary Hamming code: one H column per projective point, normalised so the
/// first nonzero coordinate is 1, in lexicographic order.
LinearCode hamming(int r, const HammingLimits& limits = {});

/// Length 10, dimension 11 - delta, generator polynomial
/// g(x) = prod_{i=1}^{delta-1} (x - alpha^(a+i)).
LinearCode reed_solomon(int delta, int alpha = 2, int a = 0);

/// g(x) used by reed_solomon().
Poly reed_solomon_generator(int delta, int alpha = 2, int a = 0);

inline constexpr std::uint64_t kDefaultEnumerationCap = 200'000;

/// 11^k when it fits below the cap, otherwise nullopt.
std::optional<std::uint64_t> codeword_count(const LinearCode& code, std::uint64_t cap);

/// Calls fn(index, codeword) for every codeword in lexicographic message
/// order (last message symbol fastest). Throws BudgetExceeded if 11^k > cap.
void for_each_codeword(const LinearCode& code, std::uint64_t cap,
                       const std::function<void(std::uint64_t, const Word&)>& fn);

std::vector<Word> enumerate(const LinearCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Message with the given lexicographic index.
Word message_at(std::size_t k, std::uint64_t index);

/// H w^T = 0 when H is known, otherwise membership in the row space of G.
/// Throws ShapeError on length mismatch.
bool is_codeword(const LinearCode& code, const Word& w);

/// n == sum_{i<k} ceil(d / 11^i).
bool griesmer_check(std::size_t n, std::size_t k, std::size_t d);
inline bool griesmer_check(const LinearCode& code, std::size_t d) {
    return griesmer_check(code.length(), code.dimension(), d);
}

// --- distance certification ---------------------------------------------------

/// HammingZ11, Induced and DnaHammingAfterF are properties of a code (the
/// last over f(phi(C))). DnaHamming is the plain Hamming distance between the
/// members of a DNA codebook, whatever pipeline produced them.
enum class Metric { HammingZ11, Induced, DnaHammingAfterF, Reverse, ReverseComplement, DnaHamming };

const char* to_string(Metric m) noexcept;

struct DistanceCert {
    enum class Kind { Exact, Bounded };

    Metric metric = Metric::HammingZ11;
    Kind kind = Kind::Exact;
    std::size_t lower = 0;
    std::size_t upper = 0;
    /// Two distinct codewords attaining `upper` (as Z11 words), when known.
    std::optional<std::pair<Word, Word>> witness;
    /// Indices of the witness pair when certified over a codebook's own
    /// sequences (complement members have indices past the originals).
    std::optional<std::pair<std::size_t, std::size_t>> witness_indices;
    /// How the bounds were obtained, e.g. "enumeration", "parity-check support search".
    std::string basis;

    bool exact() const noexcept { return kind == Kind::Exact; }
    std::size_t value() const noexcept { return upper; }

    static DistanceCert make_exact(Metric m, std::size_t v, std::optional<std::pair<Word, Word>> w, std::string basis);
    static DistanceCert make_bounded(Metric m, std::size_t lo, std::size_t hi,
                                     std::optional<std::pair<Word, Word>> w, std::string basis);
};

struct DistanceOptions {
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    /// Pairwise scans beyond this many unordered pairs fall back to bounds.
    std::uint64_t pair_budget = 200'000'000;
    /// Largest support size examined by the parity-check dependency search.
    std::size_t w_max = 3;
    /// Supports examined per weight before the search gives up.
    std::uint64_t support_budget = 20'000'000;
    /// Random codeword pairs tried when hunting for an induced-distance witness.
    std::uint64_t random_trials = 20'000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::size_t flip_threshold = 4;
};

/// Smallest-weight codewords found by searching supports of H columns in
/// increasing size, up to w_max.
struct LowWeightSearch {
    /// Every support of size < lower_bound has been ruled out.
    std::size_t lower_bound = 1;
    /// Weight of the lightest codeword found (0 when none).
    std::size_t found_weight = 0;
    /// Codewords of weight found_weight, one per examined support (capped).
    std::vector<Word> codewords;
    bool exhausted = true;
};

LowWeightSearch low_weight_search(const LinearCode& code, const DistanceOptions& options = {},
                                  std::size_t max_codewords = 256);

/// Metrics HammingZ11 and Induced work on the code itself; Reverse,
/// ReverseComplement and DnaHammingAfterF act on the DNA images (without f
/// for the first two).
DistanceCert min_distance(const LinearCode& code, Metric metric, const DistanceOptions& options = {});

} // namespace helix
