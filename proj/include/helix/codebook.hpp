// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "helix/codes.hpp"
#include "helix/dna.hpp"
#include "helix/folding.hpp"

namespace helix {

/// log_4(11), the information carried by one trinucleotide block.
inline const double kLog4Of11 = 1.7297158093186486; // log(11) / log(4)

struct Thresholds {
    std::size_t max_run = 4;
    std::size_t max_stem = 2;
};

struct CodebookSpec {
    FamilyTag family = Family1Tag{2};
    bool apply_f = false;
    bool augment_complement = false;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::size_t flip_threshold = 4;
    Thresholds thresholds;

    bool check_runs = true;
    bool check_stems = true;
    bool check_rc = true;
    bool check_energy = true;

    /// Implicit (non-enumerable) books are verified on this many random messages.
    std::uint64_t sample_count = 10'000;
    std::uint64_t seed = 1;
    /// Energy folding is O(n^3); longer sequences are reported as skipped.
    std::size_t energy_max_length = 256;
    /// Stem scanning is O(n^2); longer sequences are reported as skipped.
    std::size_t stem_max_length = 4096;
    unsigned threads = 0;

    /// Throws BadArgument when thresholds or caps are not positive.
    void validate() const;
};

struct DnaCodebook {
    CodebookSpec spec;
    LinearCode code;
    std::size_t dna_length = 0;
    std::size_t size_exponent = 0;
    bool augmented = false;
    double rate = 0.0;
    /// Present iff the book is enumerable; complements (if augmented) follow
    /// the originals in the same order.
    std::optional<std::vector<DnaSeq>> sequences;
    std::optional<std::vector<Word>> words;
    std::map<Metric, DistanceCert> distances;
    /// Pairs of codewords whose DNA images coincide (f is not injective).
    std::size_t duplicate_sequences = 0;

    bool explicit_book() const noexcept { return sequences.has_value(); }
    /// DNA image of a codeword under this book's pipeline (phi, then f if enabled).
    DnaSeq image(const Word& codeword) const;
};

/// (k log4 11 + [log4 2 if augmented]) / dna_length.
double code_rate(std::size_t k_exponent, bool augmented, std::size_t dna_length);

/// Rate of the underlying Z11 code's DNA image divided by its symbol rate k/n.
inline double rate_factor() { return kLog4Of11 / 3.0; }

/// Constructs code -> phi -> [f] -> [C u C^c]. Enumerable books carry their
/// sequences; otherwise the result is implicit (sequences empty) and the
/// caller can tell from explicit_book(). Augmentation is refused with
/// GuardViolated unless the book's minimum Hamming distance is at most n.
DnaCodebook build(const CodebookSpec& spec);

/// Closed interval the post-f distance is claimed to lie in, from the
/// induced distance d and code length n: [ceil(3d/4), ceil((3n+3d)/4)].
struct ClaimedInterval {
    std::size_t lower = 0;
    std::size_t upper = 0;
};
ClaimedInterval flip_distance_interval(std::size_t n, std::size_t d);

/// Fills book.distances for the requested metrics. Exact for enumerable
/// books (pairwise over the book's own sequences, complements included),
/// bounded otherwise.
void certify_distances(DnaCodebook& book, const std::vector<Metric>& metrics, const DistanceOptions& options = {});

enum class CheckStatus { Pass, Fail, Sampled, Skipped };
const char* to_string(CheckStatus s) noexcept;

struct ConstraintWitness {
    std::size_t index = 0; ///< sequence index in the book or sample
    std::optional<Word> codeword;
    DnaSeq sequence;
    std::vector<PairPos> positions; ///< 1-based; (start, end) for runs, pairs for stems
};

struct ConstraintResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    /// Bound being checked (max run, max stem, or the energy floor as -4n).
    long long threshold = 0;
    /// Largest run / stem, or lowest energy seen.
    long long worst_value = 0;
    std::uint64_t sample_count = 0;
    /// Whether the construction claims this bound; failures of claimed bounds
    /// are errata rather than ordinary violations.
    bool claimed = false;
    std::optional<ConstraintWitness> witness;
    std::string note;

    bool failed() const noexcept { return status == CheckStatus::Fail; }
};

struct GcSummary {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
};

struct ConstraintReport {
    std::vector<ConstraintResult> results;
    GcSummary gc;
    std::uint64_t seed = 0;
    bool exhaustive = false;

    const ConstraintResult* find(std::string_view name) const noexcept;
    bool any_hard_failure() const noexcept;
};

/// Checks runs <= max_run, stems <= max_stem and, for phi images without f,
/// E >= -4n on every codeword of an explicit book or on
/// spec.sample_count random codewords of an implicit one.
ConstraintReport verify_constraints(const DnaCodebook& book);

/// Same checks over arbitrary sequences (e.g. read from FASTA). The energy
/// bound applies only to sequences made of alphabet blocks.
ConstraintReport verify_sequences(const std::vector<DnaSeq>& seqs, const Thresholds& thresholds,
                                  std::size_t energy_max_length = 256, std::size_t stem_max_length = 4096,
                                  unsigned threads = 0);

struct RateEntry {
    std::string name;
    std::size_t n_dna = 0;
    std::size_t size_exponent = 0; ///< log11 of the size; 0 for external rows
    double rate = 0.0;
    std::string p1_stem;
    std::string p2_run;
    std::string p3_rc;
    std::string provenance; ///< "computed" or "external"
};

/// Computed rows for the five Z11 constructions, reference constants for
/// the literature rows, and the log4(11)/3 factor as a final row.
std::vector<RateEntry> rate_table();

} // namespace helix
