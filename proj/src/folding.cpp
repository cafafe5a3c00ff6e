// SPDX-License-Identifier: Apache-2.0

#include "helix/folding.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <limits>

#include "helix/parallel.hpp"
#include "helix/sigma_map.hpp"

namespace helix {

EnergyModel EnergyModel::nussinov_jackson() {
    //            A   C   G   T
    return EnergyModel({{{0, 0, 0, -4},    // A
                         {0, 0, -5, 0},    // C
                         {0, -5, 0, -1},   // G
                         {-4, 0, -1, 0}}}); // T
}

bool EnergyModel::is_symmetric() const noexcept {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (mu_[a][b] != mu_[b][a])
                return false;
    return true;
}

namespace {

class EnergyTable {
public:
    EnergyTable(const DnaSeq& x, const EnergyModel& model) : x_(x), model_(model), n_(x.size()), e_(n_ * n_, 0) {
        for (std::size_t len = 3; len <= n_; ++len)
            for (std::size_t i = 0; i + len <= n_; ++i) {
                const std::size_t j = i + len - 1;
                int best = at(i + 1, j - 1) + model_(x_[i], x_[j]);
                for (std::size_t k = i + 1; k <= j; ++k)
                    best = std::min(best, at(i, k - 1) + at(k, j));
                e_[i * n_ + j] = best;
            }
    }

    int at(std::size_t i, std::size_t j) const noexcept { return j <= i + 1 ? 0 : e_[i * n_ + j]; }

    std::vector<PairPos> traceback() const {
        std::vector<PairPos> pairs;
        std::vector<std::pair<std::size_t, std::size_t>> stack;
        if (n_ >= 3)
            stack.emplace_back(0, n_ - 1);
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            if (j <= i + 1)
                continue;
            const int value = at(i, j);
            const int mu = model_(x_[i], x_[j]);
            if (value == at(i + 1, j - 1) + mu) {
                if (mu < 0)
                    pairs.emplace_back(i + 1, j + 1);
                stack.emplace_back(i + 1, j - 1);
                continue;
            }
            for (std::size_t k = i + 1; k <= j; ++k)
                if (value == at(i, k - 1) + at(k, j)) {
                    stack.emplace_back(i, k - 1);
                    stack.emplace_back(k, j);
                    break;
                }
        }
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    }

private:
    const DnaSeq& x_;
    const EnergyModel& model_;
    std::size_t n_;
    std::vector<int> e_;
};

constexpr int base_index(char c) noexcept {
    switch (c) {
    case 'A': return 0;
    case 'C': return 1;
    case 'G': return 2;
    default: return 3;
    }
}

struct StemScan {
    std::size_t length = 0;
    std::size_t outer_i = 0;
    std::size_t outer_j = 0;
};

// Walks every anti-diagonal i + j = s from the innermost pair outward; the
// running count of consecutive pairing positions is exactly the nested chain
// length ending at the current outer pair.
template <typename PairFn>
StemScan scan_stems(std::size_t n, PairFn&& pairs) {
    StemScan best;
    if (n < 2)
        return best;
    for (std::size_t s = 1; s + 2 <= 2 * n - 1; ++s) {
        std::size_t i = s % 2 == 0 ? s / 2 - 1 : (s - 1) / 2;
        std::size_t j = s - i;
        std::size_t run = 0;
        while (j < n) {
            if (pairs(i, j)) {
                ++run;
                if (run > best.length || (run == best.length && (i < best.outer_i ||
                                                                 (i == best.outer_i && j < best.outer_j))))
                    best = {run, i, j};
            } else {
                run = 0;
            }
            if (i == 0)
                break;
            --i;
            ++j;
        }
    }
    return best;
}

} // namespace

long long min_free_energy(const DnaSeq& x, const EnergyModel& model) {
    if (x.empty())
        fail(ErrorCode::EmptyInput, "free energy of an empty sequence");
    EnergyTable table(x, model);
    return table.at(0, x.size() - 1);
}

FoldReport fold(const DnaSeq& x, const EnergyModel& model) {
    if (x.empty())
        fail(ErrorCode::EmptyInput, "fold of an empty sequence");
    EnergyTable table(x, model);
    FoldReport report;
    report.min_free_energy = table.at(0, x.size() - 1);
    report.structure = table.traceback();
    auto stem = max_stem_length(x, model);
    report.max_stem_length = stem.length;
    report.stem_witness = std::move(stem.witness);
    return report;
}

std::string dot_bracket(std::size_t n, const std::vector<PairPos>& pairs) {
    std::string out(n, '.');
    for (auto [i, j] : pairs) {
        if (i >= 1 && i <= n)
            out[i - 1] = '(';
        if (j >= 1 && j <= n)
            out[j - 1] = ')';
    }
    return out;
}

StemResult max_stem_length(const DnaSeq& x, const EnergyModel& model) {
    auto scan = scan_stems(x.size(), [&](std::size_t i, std::size_t j) { return model.pairs(x[i], x[j]); });
    StemResult result;
    result.length = scan.length;
    for (std::size_t t = 0; t < scan.length; ++t)
        result.witness.emplace_back(scan.outer_i + t + 1, scan.outer_j - t + 1);
    return result;
}

std::size_t max_stem_value(std::string_view bases, const EnergyModel& model) {
    std::array<std::array<bool, 4>, 4> pair_table{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            pair_table[a][b] = model.pairs(static_cast<Base>(a), static_cast<Base>(b));
    return scan_stems(bases.size(), [&](std::size_t i, std::size_t j) {
               return pair_table[base_index(bases[i])][base_index(bases[j])];
           }).length;
}

std::optional<DisjointScWitness> has_disjoint_sc_subsequence(const DnaSeq& x, std::size_t l) {
    const std::size_t n = x.size();
    if (l < 1 || l > n / 2)
        fail(ErrorCode::BadArgument, "sub-sequence length " + std::to_string(l) + " outside [1, " +
                                         std::to_string(n / 2) + "]");
    for (std::size_t i = 0; i + 2 * l <= n; ++i)
        for (std::size_t j = i + l; j + l <= n; ++j) {
            bool all = true;
            for (std::size_t t = 0; t < l && all; ++t)
                all = is_sc_pair(x[i + t], x[j + l - 1 - t]);
            if (all)
                return DisjointScWitness{i + 1, j + 1};
        }
    return std::nullopt;
}

// --- window certification ---------------------------------------------------

std::string CertReport::resume_token() const {
    return std::to_string(next_index) + ":" + std::to_string(max_stem_found) + ":" +
           (witness_index ? std::to_string(*witness_index) : std::string("-"));
}

void parse_resume_token(std::string_view token, CertifyOptions& options) {
    auto bad = [&] { fail(ErrorCode::ParseError, "malformed resume token '" + std::string(token) + "'"); };
    auto take = [&](std::string_view& rest) {
        auto colon = rest.find(':');
        auto field = rest.substr(0, colon);
        rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
        return field;
    };
    auto to_u64 = [&](std::string_view s) {
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            bad();
        return v;
    };
    std::string_view rest = token;
    auto next = take(rest);
    auto best = take(rest);
    auto witness = take(rest);
    if (next.empty() || best.empty() || witness.empty() || !rest.empty())
        bad();
    options.start_index = to_u64(next);
    options.carried_max_stem = static_cast<std::size_t>(to_u64(best));
    options.carried_witness_index = witness == "-" ? std::nullopt : std::optional(to_u64(witness));
}

namespace {

std::uint64_t checked_power(std::uint64_t base, std::size_t exp) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            fail(ErrorCode::BudgetExceeded, "enumeration size overflows 64 bits");
        result *= base;
    }
    return result;
}

struct ChunkBest {
    std::size_t stem = 0;
    std::optional<std::uint64_t> index;
};

} // namespace

CertReport certify_concatenations(const std::vector<DnaSeq>& alphabet, std::size_t window, std::size_t l_max,
                                  const CertifyOptions& options, const EnergyModel& model,
                                  std::string alphabet_id) {
    const auto started = std::chrono::steady_clock::now();
    if (alphabet.empty())
        fail(ErrorCode::EmptyInput, "empty block alphabet");
    if (window < 1)
        fail(ErrorCode::BadArgument, "window must be at least 1");
    const std::size_t m = alphabet.front().size();
    if (m == 0)
        fail(ErrorCode::BadArgument, "alphabet blocks must be nonempty");
    for (const auto& block : alphabet)
        if (block.size() != m)
            fail(ErrorCode::BadArgument, "alphabet blocks must all have the same length");

    const std::uint64_t q = alphabet.size();
    CertReport report;
    report.alphabet_id = std::move(alphabet_id);
    report.window = window;
    report.l_max = l_max;
    report.total_count = checked_power(q, window);
    if (options.start_index > report.total_count)
        fail(ErrorCode::BadArgument, "resume index beyond enumeration range");

    const std::uint64_t begin = options.start_index;
    const std::uint64_t end = begin + std::min(report.total_count - begin, options.budget);
    const unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
    const std::size_t chunks = static_cast<std::size_t>(std::min<std::uint64_t>(end - begin, 1024));

    std::vector<ChunkBest> results(chunks);
    parallel_chunks(begin, end, chunks, threads, [&](std::size_t c, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::size_t> digits(window);
        std::uint64_t v = lo;
        for (std::size_t pos = window; pos-- > 0;) {
            digits[pos] = static_cast<std::size_t>(v % q);
            v /= q;
        }
        std::string buffer(window * m, 'A');
        for (std::size_t pos = 0; pos < window; ++pos)
            std::copy(alphabet[digits[pos]].str().begin(), alphabet[digits[pos]].str().end(),
                      buffer.begin() + static_cast<std::ptrdiff_t>(pos * m));
        ChunkBest best;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::size_t stem = max_stem_value(buffer, model);
            if (!best.index || stem > best.stem)
                best = {stem, idx};
            // odometer step, last block fastest
            for (std::size_t pos = window; pos-- > 0;) {
                digits[pos] = (digits[pos] + 1) % q;
                std::copy(alphabet[digits[pos]].str().begin(), alphabet[digits[pos]].str().end(),
                          buffer.begin() + static_cast<std::ptrdiff_t>(pos * m));
                if (digits[pos] != 0)
                    break;
            }
        }
        results[c] = best;
    });

    ChunkBest overall{options.carried_max_stem, options.carried_witness_index};
    for (const auto& r : results)
        if (r.index && (!overall.index || r.stem > overall.stem))
            overall = r;

    report.max_stem_found = overall.stem;
    report.witness_index = overall.index;
    report.enumerated_count = end - begin;
    report.next_index = end;
    report.complete = end == report.total_count;
    if (overall.index) {
        std::uint64_t v = *overall.index;
        report.witness_word.assign(window, 0);
        for (std::size_t pos = window; pos-- > 0;) {
            report.witness_word[pos] = static_cast<std::size_t>(v % q);
            v /= q;
        }
        DnaSeq concat;
        for (auto b : report.witness_word)
            concat = concat + alphabet[b];
        report.witness_stem = max_stem_length(concat, model);
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

bool check_energy_bound(const DnaSeq& x, const EnergyModel& model) {
    const Word blocks = phi_inv(x);
    return min_free_energy(x, model) >= -4LL * static_cast<long long>(blocks.size());
}

} // namespace helix
