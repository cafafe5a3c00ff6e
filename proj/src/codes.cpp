// SPDX-License-Identifier: Apache-2.0

#include "helix/codes.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <unordered_map>

#include "helix/distance.hpp"
#include "helix/rng.hpp"
#include "helix/sigma_map.hpp"

namespace helix {

// --- family specs -------------------------------------------------------------

std::string to_string(const FamilyTag& tag) {
    struct Visitor {
        std::string operator()(const Family1Tag& t) const { return "family1:k=" + std::to_string(t.k); }
        std::string operator()(const HammingTag& t) const { return "hamming:r=" + std::to_string(t.r); }
        std::string operator()(const ReedSolomonTag& t) const {
            return "rs:delta=" + std::to_string(t.delta) + ",alpha=" + std::to_string(t.alpha) +
                   ",a=" + std::to_string(t.a);
        }
        std::string operator()(const CustomTag&) const { return "custom"; }
    };
    return std::visit(Visitor{}, tag);
}

namespace {

std::map<std::string, int, std::less<>> parse_params(std::string_view spec, std::string_view params) {
    std::map<std::string, int, std::less<>> out;
    while (!params.empty()) {
        auto comma = params.find(',');
        auto item = params.substr(0, comma);
        params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            fail(ErrorCode::ParseError, "code spec '" + std::string(spec) + "': expected key=value, got '" +
                                            std::string(item) + "'");
        auto key = item.substr(0, eq);
        auto value = item.substr(eq + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size() || value.empty())
            fail(ErrorCode::ParseError, "code spec '" + std::string(spec) + "': '" + std::string(value) +
                                            "' is not an integer");
        if (!out.emplace(std::string(key), v).second)
            fail(ErrorCode::ParseError, "code spec '" + std::string(spec) + "': duplicate key '" +
                                            std::string(key) + "'");
    }
    return out;
}

int take(std::map<std::string, int, std::less<>>& params, std::string_view key, std::optional<int> fallback,
         std::string_view spec) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (!fallback)
            fail(ErrorCode::ParseError, "code spec '" + std::string(spec) + "' is missing '" + std::string(key) + "'");
        return *fallback;
    }
    int v = it->second;
    params.erase(it);
    return v;
}

} // namespace

FamilyTag parse_family(std::string_view spec) {
    auto colon = spec.find(':');
    auto name = spec.substr(0, colon);
    auto params = parse_params(spec, colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1));
    FamilyTag tag;
    if (name == "family1") {
        tag = Family1Tag{take(params, "k", std::nullopt, spec)};
    } else if (name == "hamming") {
        tag = HammingTag{take(params, "r", std::nullopt, spec)};
    } else if (name == "rs") {
        ReedSolomonTag t;
        t.delta = take(params, "delta", std::nullopt, spec);
        t.alpha = take(params, "alpha", 2, spec);
        t.a = take(params, "a", 0, spec);
        tag = t;
    } else {
        fail(ErrorCode::ParseError, "unknown code family '" + std::string(name) + "' (expected family1, hamming or rs)");
    }
    if (!params.empty())
        fail(ErrorCode::ParseError, "code spec '" + std::string(spec) + "': unknown key '" + params.begin()->first + "'");
    return tag;
}

// --- LinearCode -----------------------------------------------------------------

LinearCode::LinearCode(FamilyTag family, std::size_t n, std::size_t k, std::optional<Matrix> generator,
                       std::optional<Matrix> parity_check)
    : family_(std::move(family)), n_(n), k_(k), g_(std::move(generator)), h_(std::move(parity_check)) {
    if (g_ && (g_->rows() != k_ || g_->cols() != n_))
        fail(ErrorCode::ShapeError, "generator matrix shape does not match (n, k)");
    if (h_ && (h_->rows() != n_ - k_ || h_->cols() != n_))
        fail(ErrorCode::ShapeError, "parity-check matrix shape does not match (n, k)");
    if (!g_ && !h_)
        fail(ErrorCode::BadArgument, "a linear code needs a generator or a parity-check matrix");
    if (!g_) {
        // Systematic encoding needs a unit column for every parity row.
        const std::size_t r = h_->rows();
        check_positions_.assign(r, n_);
        std::vector<bool> used(n_, false);
        for (std::size_t c = 0; c < n_; ++c) {
            std::size_t nonzero = 0;
            std::size_t row = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (!(*h_)(i, c).is_zero()) {
                    ++nonzero;
                    row = i;
                }
            if (nonzero == 1 && (*h_)(row, c) == Z11(1) && check_positions_[row] == n_) {
                check_positions_[row] = c;
                used[c] = true;
            }
        }
        if (std::find(check_positions_.begin(), check_positions_.end(), n_) != check_positions_.end())
            fail(ErrorCode::BadArgument, "parity-check matrix lacks an identity sub-matrix");
        for (std::size_t c = 0; c < n_; ++c)
            if (!used[c])
                info_positions_.push_back(c);
    }
}

Word LinearCode::encode(const Word& msg) const {
    if (g_)
        return helix::encode(msg, *g_);
    if (msg.size() != k_)
        fail(ErrorCode::ShapeError, "message length " + std::to_string(msg.size()) + " does not match dimension " +
                                        std::to_string(k_));
    Word out(n_);
    for (std::size_t t = 0; t < k_; ++t)
        out[info_positions_[t]] = msg[t];
    for (std::size_t i = 0; i < check_positions_.size(); ++i) {
        Z11 acc;
        auto row = h_->row_span(i);
        for (std::size_t t = 0; t < k_; ++t)
            acc += row[info_positions_[t]] * msg[t];
        out[check_positions_[i]] = -acc;
    }
    return out;
}

// --- families -------------------------------------------------------------------

LinearCode family1(int k) {
    if (k < 2 || k > 5)
        fail(ErrorCode::BadArgument, "family1 needs 2 <= k <= 5, got " + std::to_string(k));
    Matrix g{{1, 1, 1, 1}, {1, 5, 9, 10}};
    for (int i = 2; i < k; ++i) {
        const std::size_t width = g.cols();
        Matrix next(g.rows() + 1, 4 * width);
        // top row: constant blocks 1, 2, 3, 4, each as wide as the previous G
        for (std::size_t c = 0; c < 4 * width; ++c)
            next(0, c) = Z11(static_cast<long long>(c / width + 1));
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < 4 * width; ++c)
                next(r + 1, c) = g(r, c % width);
        g = std::move(next);
    }
    const std::size_t n = g.cols();
    Matrix h = null_space(g);
    return LinearCode(Family1Tag{k}, n, static_cast<std::size_t>(k), std::move(g), std::move(h));
}

LinearCode hamming(int r, const HammingLimits& limits) {
    if (r < 2)
        fail(ErrorCode::BadArgument, "hamming needs r >= 2, got " + std::to_string(r));
    std::uint64_t n = 0;
    {
        std::uint64_t p = 1;
        for (int i = 0; i < r; ++i) {
            if (p > std::numeric_limits<std::uint64_t>::max() / 11)
                fail(ErrorCode::BudgetExceeded, "hamming code length overflows");
            p *= 11;
        }
        n = (p - 1) / 10;
    }
    if (n > limits.max_parity_entries / static_cast<std::uint64_t>(r))
        fail(ErrorCode::BudgetExceeded, "hamming r=" + std::to_string(r) + " parity-check matrix has " +
                                            std::to_string(n * static_cast<std::uint64_t>(r)) +
                                            " entries, over the budget of " +
                                            std::to_string(limits.max_parity_entries));
    const auto rr = static_cast<std::size_t>(r);
    Matrix h(rr, static_cast<std::size_t>(n));
    std::size_t col = 0;
    // Lexicographic order of the normalised points: more leading zeros first.
    for (std::size_t lead = rr; lead-- > 0;) {
        const std::size_t tail = rr - 1 - lead;
        std::vector<int> digits(tail, 0);
        while (true) {
            h(lead, col) = Z11(1);
            for (std::size_t t = 0; t < tail; ++t)
                h(lead + 1 + t, col) = Z11(digits[t]);
            ++col;
            std::size_t pos = tail;
            while (pos > 0 && ++digits[pos - 1] == 11)
                digits[--pos] = 0;
            if (pos == 0)
                break;
        }
    }
    const std::size_t k = static_cast<std::size_t>(n) - rr;
    LinearCode h_only(HammingTag{r}, static_cast<std::size_t>(n), k, std::nullopt, h);
    if (static_cast<std::uint64_t>(k) * n > limits.max_generator_entries)
        return h_only;
    Matrix g(k, static_cast<std::size_t>(n));
    Word unit(k);
    for (std::size_t t = 0; t < k; ++t) {
        unit[t] = Z11(1);
        Word row = h_only.encode(unit);
        unit[t] = Z11(0);
        for (std::size_t c = 0; c < row.size(); ++c)
            g(t, c) = row[c];
    }
    return LinearCode(HammingTag{r}, static_cast<std::size_t>(n), k, std::move(g), std::move(h));
}

Poly reed_solomon_generator(int delta, int alpha, int a) {
    Poly g({1});
    const Z11 base(alpha);
    for (int i = 1; i <= delta - 1; ++i)
        g = poly_mul(g, Poly::linear_root(base.pow(static_cast<unsigned long long>(a + i))));
    return g;
}

LinearCode reed_solomon(int delta, int alpha, int a) {
    if (delta < 2 || delta > 10)
        fail(ErrorCode::BadArgument, "reed-solomon needs 2 <= delta <= 10, got " + std::to_string(delta));
    if (a < 0)
        fail(ErrorCode::BadArgument, "reed-solomon offset a must be non-negative");
    const Z11 al(alpha);
    if (al.is_zero() || multiplicative_order(al) != 10)
        fail(ErrorCode::BadArgument, "alpha=" + std::to_string(alpha) + " is not a primitive element mod 11");
    constexpr std::size_t n = 10;
    const std::size_t k = static_cast<std::size_t>(11 - delta);
    const Poly g = reed_solomon_generator(delta, alpha, a);
    Matrix gen(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c <= static_cast<std::size_t>(g.degree()); ++c)
            gen(i, i + c) = g.coefficient(c);
    Matrix h(n - k, n);
    for (std::size_t j = 0; j < n - k; ++j) {
        const Z11 root = al.pow(static_cast<unsigned long long>(a) + 1 + j);
        for (std::size_t p = 0; p < n; ++p)
            h(j, p) = root.pow(p);
    }
    return LinearCode(ReedSolomonTag{delta, alpha, a}, n, k, std::move(gen), std::move(h));
}

LinearCode build_code(const FamilyTag& tag) {
    struct Visitor {
        LinearCode operator()(const Family1Tag& t) const { return family1(t.k); }
        LinearCode operator()(const HammingTag& t) const { return hamming(t.r); }
        LinearCode operator()(const ReedSolomonTag& t) const { return reed_solomon(t.delta, t.alpha, t.a); }
        LinearCode operator()(const CustomTag&) const {
            fail(ErrorCode::BadArgument, "custom codes must be constructed from matrices");
        }
    };
    return std::visit(Visitor{}, tag);
}

// --- enumeration ------------------------------------------------------------------

std::optional<std::uint64_t> codeword_count(const LinearCode& code, std::uint64_t cap) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        count *= 11;
        if (count > cap)
            return std::nullopt;
    }
    return count;
}

Word message_at(std::size_t k, std::uint64_t index) {
    Word msg(k);
    for (std::size_t pos = k; pos-- > 0;) {
        msg[pos] = Z11(static_cast<long long>(index % 11));
        index /= 11;
    }
    return msg;
}

void for_each_codeword(const LinearCode& code, std::uint64_t cap,
                       const std::function<void(std::uint64_t, const Word&)>& fn) {
    auto count = codeword_count(code, cap);
    if (!count)
        fail(ErrorCode::BudgetExceeded, "11^" + std::to_string(code.dimension()) +
                                            " codewords exceed the enumeration cap of " + std::to_string(cap));
    const std::size_t k = code.dimension();
    std::vector<Word> rows;
    rows.reserve(k);
    Word unit(k);
    for (std::size_t t = 0; t < k; ++t) {
        unit[t] = Z11(1);
        rows.push_back(code.encode(unit));
        unit[t] = Z11(0);
    }
    std::vector<int> digits(k, 0);
    Word current(code.length());
    for (std::uint64_t idx = 0; idx < *count; ++idx) {
        fn(idx, current);
        // Adding a row eleven times is the identity, so a wrapping digit needs
        // no correction.
        for (std::size_t pos = k; pos-- > 0;) {
            const auto& row = rows[pos];
            for (std::size_t c = 0; c < current.size(); ++c)
                current[c] += row[c];
            if (++digits[pos] < 11)
                break;
            digits[pos] = 0;
        }
    }
}

std::vector<Word> enumerate(const LinearCode& code, std::uint64_t cap) {
    std::vector<Word> words;
    if (auto count = codeword_count(code, cap))
        words.reserve(static_cast<std::size_t>(*count));
    for_each_codeword(code, cap, [&](std::uint64_t, const Word& w) { words.push_back(w); });
    return words;
}

bool is_codeword(const LinearCode& code, const Word& w) {
    if (w.size() != code.length())
        fail(ErrorCode::ShapeError, "word length " + std::to_string(w.size()) + " does not match code length " +
                                        std::to_string(code.length()));
    if (code.parity_check()) {
        Word s = apply(*code.parity_check(), w);
        return s.weight() == 0;
    }
    const Matrix& g = *code.generator();
    Matrix stacked(g.rows() + 1, g.cols());
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c)
            stacked(r, c) = g(r, c);
    for (std::size_t c = 0; c < g.cols(); ++c)
        stacked(g.rows(), c) = w[c];
    return stacked.rank() == g.rank();
}

bool griesmer_check(std::size_t n, std::size_t k, std::size_t d) {
    std::size_t sum = 0;
    std::size_t q_pow = 1;
    for (std::size_t i = 0; i < k; ++i) {
        sum += (d + q_pow - 1) / q_pow;
        if (q_pow > std::numeric_limits<std::size_t>::max() / 11)
            q_pow = std::numeric_limits<std::size_t>::max();
        else
            q_pow *= 11;
    }
    return sum == n;
}

// --- distance certificates -------------------------------------------------------------

const char* to_string(Metric m) noexcept {
    switch (m) {
    case Metric::HammingZ11: return "hamming_z11";
    case Metric::Induced: return "induced";
    case Metric::DnaHammingAfterF: return "dna_hamming_after_f";
    case Metric::Reverse: return "reverse";
    case Metric::ReverseComplement: return "reverse_complement";
    case Metric::DnaHamming: return "dna_hamming";
    }
    return "unknown";
}

DistanceCert DistanceCert::make_exact(Metric m, std::size_t v, std::optional<std::pair<Word, Word>> w,
                                      std::string basis) {
    return DistanceCert{m, Kind::Exact, v, v, std::move(w), std::nullopt, std::move(basis)};
}

DistanceCert DistanceCert::make_bounded(Metric m, std::size_t lo, std::size_t hi,
                                        std::optional<std::pair<Word, Word>> w, std::string basis) {
    if (lo == hi && w)
        return DistanceCert{m, Kind::Exact, lo, hi, std::move(w), std::nullopt, std::move(basis) + "; bounds meet"};
    return DistanceCert{m, Kind::Bounded, lo, hi, std::move(w), std::nullopt, std::move(basis)};
}

namespace {

// Gaussian elimination on a small column-major set; returns a null vector
// when the columns are dependent.
std::optional<std::vector<Z11>> dependency(const Matrix& h, const std::vector<std::size_t>& cols) {
    const std::size_t r = h.rows();
    const std::size_t w = cols.size();
    Matrix sub(r, w);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t t = 0; t < w; ++t)
            sub(i, t) = h(i, cols[t]);
    if (sub.rank() == w)
        return std::nullopt;
    Matrix basis = null_space(sub);
    auto row = basis.row_span(0);
    return std::vector<Z11>(row.begin(), row.end());
}

Word normalised(Word v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) {
            const Z11 inv = v[i].inverse();
            return inv * v;
        }
    return v;
}

} // namespace

LowWeightSearch low_weight_search(const LinearCode& code, const DistanceOptions& options,
                                  std::size_t max_codewords) {
    const Matrix h = code.parity_check() ? *code.parity_check() : null_space(*code.generator());
    const std::size_t n = code.length();
    LowWeightSearch result;
    auto unit_word = [&](const std::vector<std::size_t>& cols, const std::vector<Z11>& coeffs) {
        Word w(n);
        for (std::size_t t = 0; t < cols.size(); ++t)
            w[cols[t]] = coeffs[t];
        return w;
    };

    // weight 1: zero columns
    for (std::size_t c = 0; c < n && result.codewords.size() < max_codewords; ++c)
        if (h.column(c).weight() == 0)
            result.codewords.push_back(unit_word({c}, {Z11(1)}));
    if (!result.codewords.empty()) {
        result.found_weight = result.lower_bound = 1;
        return result;
    }
    result.lower_bound = 2;
    if (options.w_max < 2)
        return result;

    // weight 2: proportional columns
    std::map<Word, std::size_t> seen;
    for (std::size_t c = 0; c < n && result.codewords.size() < max_codewords; ++c) {
        Word col = h.column(c);
        Word key = normalised(col);
        auto [it, inserted] = seen.emplace(key, c);
        if (inserted)
            continue;
        const std::size_t first = it->second;
        Word first_col = h.column(first);
        // col = lambda * first_col  =>  lambda * e_first - e_c is a codeword
        Z11 lambda;
        for (std::size_t i = 0; i < first_col.size(); ++i)
            if (!first_col[i].is_zero()) {
                lambda = col[i] * first_col[i].inverse();
                break;
            }
        result.codewords.push_back(unit_word({first, c}, {lambda, Z11(-1)}));
    }
    if (!result.codewords.empty()) {
        result.found_weight = result.lower_bound = 2;
        return result;
    }
    result.lower_bound = 3;

    for (std::size_t w = 3; w <= options.w_max && w <= n; ++w) {
        std::vector<std::size_t> cols(w);
        for (std::size_t t = 0; t < w; ++t)
            cols[t] = t;
        std::uint64_t examined = 0;
        bool budget_hit = false;
        while (true) {
            if (examined++ >= options.support_budget) {
                budget_hit = true;
                break;
            }
            if (auto dep = dependency(h, cols)) {
                result.codewords.push_back(unit_word(cols, *dep));
                if (result.codewords.size() >= max_codewords)
                    break;
            }
            // next combination
            std::size_t pos = w;
            while (pos > 0 && cols[pos - 1] == n - w + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++cols[pos - 1];
            for (std::size_t t = pos; t < w; ++t)
                cols[t] = cols[t - 1] + 1;
        }
        if (!result.codewords.empty()) {
            result.found_weight = w;
            result.lower_bound = w;
            result.exhausted = !budget_hit;
            return result;
        }
        if (budget_hit) {
            result.exhausted = false;
            return result;
        }
        result.lower_bound = w + 1;
    }
    return result;
}

namespace {

std::pair<Word, Word> zero_pair(const Word& c) { return {Word(c.size()), c}; }

DistanceCert hamming_cert(const LinearCode& code, const DistanceOptions& options, LowWeightSearch* search_out) {
    if (codeword_count(code, options.enumeration_cap)) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::optional<Word> witness;
        for_each_codeword(code, options.enumeration_cap, [&](std::uint64_t idx, const Word& w) {
            if (idx == 0)
                return;
            const std::size_t wt = w.weight();
            if (wt < best) {
                best = wt;
                witness = w;
            }
        });
        if (!witness)
            return DistanceCert::make_exact(Metric::HammingZ11, 0, std::nullopt, "enumeration (single codeword)");
        return DistanceCert::make_exact(Metric::HammingZ11, best, zero_pair(*witness),
                                        "enumeration: minimum nonzero weight");
    }
    LowWeightSearch search = low_weight_search(code, options);
    std::size_t upper = std::numeric_limits<std::size_t>::max();
    std::optional<Word> witness;
    if (search.found_weight != 0) {
        upper = search.found_weight;
        witness = search.codewords.front();
    } else {
        Word unit(code.dimension());
        const std::size_t rows = std::min<std::size_t>(code.dimension(), 4096);
        for (std::size_t t = 0; t < rows; ++t) {
            unit[t] = Z11(1);
            Word row = code.encode(unit);
            unit[t] = Z11(0);
            if (row.weight() < upper) {
                upper = row.weight();
                witness = row;
            }
        }
    }
    if (search_out)
        *search_out = search;
    return DistanceCert::make_bounded(Metric::HammingZ11, search.lower_bound, upper, zero_pair(*witness),
                                      "parity-check support search up to weight " + std::to_string(options.w_max));
}

std::vector<DnaSeq> dna_images(const std::vector<Word>& words, bool flip, std::size_t threshold) {
    std::vector<DnaSeq> out;
    out.reserve(words.size());
    for (const auto& w : words)
        out.push_back(flip ? f_flip(phi(w), threshold) : phi(w));
    return out;
}

DnaSeq image(const Word& w, Metric metric, std::size_t threshold) {
    return metric == Metric::DnaHammingAfterF ? f_flip(phi(w), threshold) : phi(w);
}

std::size_t pair_distance(const Word& x, const Word& y, Metric metric, std::size_t threshold) {
    switch (metric) {
    case Metric::HammingZ11: return hamming_distance(x, y);
    case Metric::Induced: return induced_distance(x, y);
    case Metric::DnaHammingAfterF: return hamming_distance(image(x, metric, threshold), image(y, metric, threshold));
    case Metric::Reverse: return hamming_distance(phi(x), reverse(phi(y)));
    case Metric::ReverseComplement: return hamming_distance(phi(x), reverse_complement(phi(y)));
    case Metric::DnaHamming: return hamming_distance(phi(x), phi(y));
    }
    return 0;
}

// Best pair among structured candidates (zero vs scaled low-weight codewords,
// random translates of them) and random codeword pairs.
std::optional<std::pair<std::size_t, std::pair<Word, Word>>>
search_upper(const LinearCode& code, Metric metric, const DistanceOptions& options, const LowWeightSearch& search) {
    std::optional<std::pair<std::size_t, std::pair<Word, Word>>> best;
    auto consider = [&](const Word& x, const Word& y) {
        if (x == y)
            return;
        const std::size_t d = pair_distance(x, y, metric, options.flip_threshold);
        const bool reflexive_zero = d == 0 && metric != Metric::HammingZ11 && metric != Metric::Induced;
        if (reflexive_zero)
            return;
        if (!best || d < best->first)
            best = {d, {x, y}};
    };
    const Word zero(code.length());
    for (const auto& c : search.codewords)
        for (int lambda = 1; lambda <= 10; ++lambda)
            consider(zero, Z11(lambda) * c);

    Rng rng(options.seed);
    const std::size_t k = code.dimension();
    // long codes get fewer trials so the search stays linear-ish in n
    const std::uint64_t trials =
        std::min<std::uint64_t>(options.random_trials, std::max<std::uint64_t>(64, 20'000'000 / code.length()));
    for (std::uint64_t t = 0; t < trials; ++t) {
        Word x = code.encode(random_word(rng, k));
        if (!search.codewords.empty()) {
            const auto& c = search.codewords[uniform_below(rng, search.codewords.size())];
            consider(x, x + Z11(static_cast<long long>(1 + uniform_below(rng, 10))) * c);
        }
        consider(x, code.encode(random_word(rng, k)));
        if (metric == Metric::Reverse || metric == Metric::ReverseComplement) {
            const std::size_t d = pair_distance(x, x, metric, options.flip_threshold);
            if (d != 0 && (!best || d < best->first))
                best = {d, {x, x}};
        }
    }
    return best;
}

} // namespace

DistanceCert min_distance(const LinearCode& code, Metric metric, const DistanceOptions& options) {
    if (metric == Metric::HammingZ11)
        return hamming_cert(code, options, nullptr);

    const auto count = codeword_count(code, options.enumeration_cap);
    const bool reflexive = metric == Metric::Reverse || metric == Metric::ReverseComplement;
    if (count && pair_count(*count, reflexive) <= options.pair_budget) {
        const std::vector<Word> words = enumerate(code, options.enumeration_cap);
        PairMin best;
        if (metric == Metric::Induced) {
            best = min_pairwise_induced(words, options.threads);
        } else {
            const auto seqs = dna_images(words, metric == Metric::DnaHammingAfterF, options.flip_threshold);
            // DnaHamming over phi(C) falls through to PairMode::Direct.
            const PairMode mode = metric == Metric::Reverse             ? PairMode::Reverse
                                  : metric == Metric::ReverseComplement ? PairMode::ReverseComplement
                                                                        : PairMode::Direct;
            best = min_pairwise_hamming(seqs, mode, options.threads);
        }
        if (!best.found)
            return DistanceCert::make_exact(metric, 0, std::nullopt, "exhaustive pairwise scan: no qualifying pair");
        return DistanceCert::make_exact(metric, best.value, std::pair{words[best.first], words[best.second]},
                                        "exhaustive pairwise scan over " + std::to_string(words.size()) +
                                            " codewords");
    }

    LowWeightSearch search;
    const DistanceCert hamming = hamming_cert(code, options, &search);
    auto found = search_upper(code, metric, options, search);
    const std::size_t upper = found ? found->first : std::numeric_limits<std::size_t>::max();
    std::optional<std::pair<Word, Word>> witness;
    if (found)
        witness = found->second;

    switch (metric) {
    case Metric::Induced:
        // every differing symbol contributes at least 1
        return DistanceCert::make_bounded(metric, hamming.lower, upper, witness,
                                          "lower from Hamming bound, upper from structured and random search");
    case Metric::ReverseComplement:
        // each block differs from the reverse complement of any block
        return DistanceCert::make_bounded(metric, std::min(code.length(), upper), upper, witness,
                                          "lower from block separation, upper from sampled pairs");
    case Metric::Reverse:
        return DistanceCert::make_bounded(metric, 0, upper, witness, "no lower bound proven; upper from sampled pairs");
    case Metric::DnaHammingAfterF:
        return DistanceCert::make_bounded(metric, 0, upper, witness,
                                          "run-breaking map is not injective, no lower bound proven; upper from "
                                          "sampled pairs");
    case Metric::DnaHamming:
        return DistanceCert::make_bounded(metric, hamming.lower, upper, witness,
                                          "isometric to the induced metric; upper from sampled pairs");
    case Metric::HammingZ11: break;
    }
    return hamming;
}

} // namespace helix
