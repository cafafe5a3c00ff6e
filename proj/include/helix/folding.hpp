// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "helix/dna.hpp"

namespace helix {

/// Pairwise interaction energies in integer units, indexed by Base.
class EnergyModel {
public:
    /// C-G/G-C = -5, A-T/T-A = -4, G-T/T-G = -1, everything else 0.
    static EnergyModel nussinov_jackson();

    explicit EnergyModel(const std::array<std::array<int, 4>, 4>& mu) : mu_(mu) {}

    int operator()(Base a, Base b) const noexcept { return mu_[static_cast<int>(a)][static_cast<int>(b)]; }
    bool pairs(Base a, Base b) const noexcept { return (*this)(a, b) < 0; }
    bool is_symmetric() const noexcept;

private:
    std::array<std::array<int, 4>, 4> mu_{};
};

/// 1-based pair of positions (i < j).
using PairPos = std::pair<std::size_t, std::size_t>;

struct StemResult {
    std::size_t length = 0;
    /// Nested chain from the outermost pair inward; empty when length = 0.
    std::vector<PairPos> witness;
};

struct FoldReport {
    long long min_free_energy = 0;
    std::size_t max_stem_length = 0;
    std::vector<PairPos> stem_witness;
    /// One optimal non-crossing pairing achieving min_free_energy.
    std::vector<PairPos> structure;
};

/// Minimum free energy E(1,n) of the Nussinov-Jackson recursion
///   E(i,j) = min{ E(i+1,j-1) + mu(x_i,x_j), min_{i<k<=j} E(i,k-1) + E(k,j) }
/// with E(l,l) = E(l-1,l) = 0. O(n^3) time, O(n^2) space.
/// Throws EmptyInput for the empty sequence.
long long min_free_energy(const DnaSeq& x, const EnergyModel& model = EnergyModel::nussinov_jackson());

/// Runs the energy recursion and reads back one optimal pairing.
FoldReport fold(const DnaSeq& x, const EnergyModel& model = EnergyModel::nussinov_jackson());

/// Dot-bracket rendering of a pairing over a sequence of length n.
std::string dot_bracket(std::size_t n, const std::vector<PairPos>& pairs);

/// Longest chain of nested pairs (i,j), (i+1,j-1), ... with negative energy.
/// Ties go to the smallest outermost i, then the smallest outermost j.
StemResult max_stem_length(const DnaSeq& x, const EnergyModel& model = EnergyModel::nussinov_jackson());

/// Value-only variant over raw uppercase bases, for hot loops.
std::size_t max_stem_value(std::string_view bases, const EnergyModel& model);

struct DisjointScWitness {
    std::size_t i = 0; ///< 1-based start of the first substring
    std::size_t j = 0; ///< 1-based start of its secondary complement
};

/// Searches for start positions i < j (substrings of length l, non-overlapping)
/// such that the substring at j is a secondary complement of the substring
/// at i. Smallest i, then smallest j, is reported.
/// Throws BadArgument unless 1 <= l <= size/2.
std::optional<DisjointScWitness> has_disjoint_sc_subsequence(const DnaSeq& x, std::size_t l);

struct CertifyOptions {
    /// Maximum number of windows to enumerate in this call.
    std::uint64_t budget = 50'000'000;
    /// Enumeration index to resume from.
    std::uint64_t start_index = 0;
    unsigned threads = 0; ///< 0 = default_thread_count()
    /// Best result carried over from an earlier partial run.
    std::size_t carried_max_stem = 0;
    std::optional<std::uint64_t> carried_witness_index;
};

struct CertReport {
    std::string alphabet_id;
    std::size_t window = 0;
    std::size_t l_max = 0;
    std::size_t max_stem_found = 0;
    /// Block indices of the first concatenation (in odometer order) reaching
    /// max_stem_found; empty when no window has any pair.
    std::vector<std::size_t> witness_word;
    std::optional<std::uint64_t> witness_index;
    StemResult witness_stem;
    std::uint64_t total_count = 0;
    std::uint64_t next_index = 0;
    std::uint64_t enumerated_count = 0;
    bool complete = false;
    double elapsed_seconds = 0.0;

    bool within_limit() const noexcept { return max_stem_found <= l_max; }
    /// Token accepted by parse_resume_token: "<next>:<max>:<witness or ->".
    std::string resume_token() const;
};

/// Parses a resume token back into options (budget and threads untouched).
void parse_resume_token(std::string_view token, CertifyOptions& options);

/// Enumerates every concatenation of `window` blocks in odometer order
/// (last block fastest) and records the largest stem found. When the
/// remaining work exceeds options.budget the report is partial
/// (complete = false) and resumable from next_index; callers turn that into
/// BudgetExceeded.
CertReport certify_concatenations(const std::vector<DnaSeq>& alphabet, std::size_t window, std::size_t l_max,
                                  const CertifyOptions& options = {},
                                  const EnergyModel& model = EnergyModel::nussinov_jackson(),
                                  std::string alphabet_id = "custom");

/// For x made of alphabet blocks: true iff min_free_energy(x) >= -4 * blocks.
/// Throws NotInAlphabet if x is not a concatenation of alphabet blocks.
bool check_energy_bound(const DnaSeq& x, const EnergyModel& model = EnergyModel::nussinov_jackson());

} // namespace helix
