// SPDX-License-Identifier: Apache-2.0

#include "helix/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "helix/distance.hpp"
#include "helix/error.hpp"
#include "helix/parallel.hpp"
#include "helix/rng.hpp"
#include "helix/sigma_map.hpp"

namespace helix {

void CodebookSpec::validate() const {
    if (thresholds.max_run == 0)
        fail(ErrorCode::BadArgument, "max run threshold must be positive");
    if (thresholds.max_stem == 0)
        fail(ErrorCode::BadArgument, "max stem threshold must be positive");
    if (flip_threshold < 2)
        fail(ErrorCode::BadArgument, "flip threshold must be at least 2");
    if (enumeration_cap == 0)
        fail(ErrorCode::BadArgument, "enumeration cap must be positive");
    if (sample_count == 0)
        fail(ErrorCode::BadArgument, "sample count must be positive");
}

DnaSeq DnaCodebook::image(const Word& codeword) const {
    DnaSeq x = phi(codeword);
    return spec.apply_f ? f_flip(x, spec.flip_threshold) : x;
}

double code_rate(std::size_t k_exponent, bool augmented, std::size_t dna_length) {
    if (dna_length == 0)
        fail(ErrorCode::BadArgument, "rate of a zero-length code");
    const double bits = static_cast<double>(k_exponent) * kLog4Of11 + (augmented ? 0.5 : 0.0);
    return bits / static_cast<double>(dna_length);
}

ClaimedInterval flip_distance_interval(std::size_t n, std::size_t d) {
    return {(3 * d + 3) / 4, (3 * n + 3 * d + 3) / 4};
}

namespace {

bool has_pair_within(const std::vector<DnaSeq>& seqs, std::size_t limit) {
    for (std::size_t i = 0; i < seqs.size(); ++i)
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            const std::string& a = seqs[i].str();
            const std::string& b = seqs[j].str();
            std::size_t d = 0;
            for (std::size_t t = 0; t < a.size() && d <= limit; ++t)
                d += a[t] != b[t] ? 1 : 0;
            if (d <= limit)
                return true;
        }
    return false;
}

DistanceOptions book_options(const DnaCodebook& book, DistanceOptions options) {
    options.flip_threshold = book.spec.flip_threshold;
    if (options.threads == 0)
        options.threads = book.spec.threads;
    return options;
}

} // namespace

DnaCodebook build(const CodebookSpec& spec) {
    spec.validate();
    LinearCode code = build_code(spec.family);
    const std::size_t n = code.length();
    DnaCodebook book{spec, std::move(code), 3 * n, 0, spec.augment_complement, 0.0, {}, {}, {}, 0};
    book.size_exponent = book.code.dimension();
    book.rate = code_rate(book.size_exponent, book.augmented, book.dna_length);

    if (codeword_count(book.code, spec.enumeration_cap)) {
        std::vector<Word> words = enumerate(book.code, spec.enumeration_cap);
        std::vector<DnaSeq> seqs;
        seqs.reserve(words.size() * (spec.augment_complement ? 2 : 1));
        for (const auto& w : words)
            seqs.push_back(book.image(w));

        std::vector<std::string> sorted;
        sorted.reserve(seqs.size());
        for (const auto& s : seqs)
            sorted.push_back(s.str());
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            book.duplicate_sequences += sorted[i] == sorted[i - 1] ? 1 : 0;

        if (spec.augment_complement) {
            if (!has_pair_within(seqs, n))
                fail(ErrorCode::GuardViolated, "complement augmentation needs minimum distance <= " +
                                                   std::to_string(n));
            const std::size_t originals = seqs.size();
            for (std::size_t i = 0; i < originals; ++i)
                seqs.push_back(complement(seqs[i]));
        }
        book.words = std::move(words);
        book.sequences = std::move(seqs);
    } else if (spec.augment_complement) {
        DistanceOptions options;
        options.enumeration_cap = spec.enumeration_cap;
        options.seed = spec.seed;
        options.threads = spec.threads;
        options.flip_threshold = spec.flip_threshold;
        const auto cert = min_distance(book.code, spec.apply_f ? Metric::DnaHammingAfterF : Metric::DnaHamming, options);
        if (cert.upper > n)
            fail(ErrorCode::GuardViolated, "complement augmentation needs minimum distance <= " + std::to_string(n) +
                                               " and no such pair was found");
    }
    return book;
}

namespace {

std::optional<std::pair<Word, Word>> word_pair(const DnaCodebook& book, std::size_t i, std::size_t j) {
    const auto& words = *book.words;
    if (i >= words.size() || j >= words.size())
        return std::nullopt;
    return std::pair{words[i], words[j]};
}

DistanceCert explicit_cert(const DnaCodebook& book, Metric metric, PairMode mode, unsigned threads) {
    const auto& seqs = *book.sequences;
    const PairMin best = min_pairwise_hamming(std::span<const DnaSeq>(seqs), mode, threads);
    const std::string basis = "exhaustive pairwise scan over " + std::to_string(seqs.size()) + " book sequences";
    if (!best.found)
        return DistanceCert::make_exact(metric, 0, std::nullopt, basis + ": no qualifying pair");
    DistanceCert cert = DistanceCert::make_exact(metric, best.value, word_pair(book, best.first, best.second), basis);
    cert.witness_indices = std::pair{best.first, best.second};
    return cert;
}

// Reverse and reverse-complement distances over sampled members of an implicit
// book, including x == y.
DistanceCert sampled_transform_cert(const DnaCodebook& book, Metric metric, const DistanceOptions& options) {
    const bool rc = metric == Metric::ReverseComplement;
    Rng rng(options.seed);
    const std::size_t k = book.code.dimension();
    std::optional<std::pair<std::size_t, std::pair<Word, Word>>> best;
    const std::uint64_t trials = std::min<std::uint64_t>(
        options.random_trials, std::max<std::uint64_t>(64, 20'000'000 / book.code.length()));
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Word x = book.code.encode(random_word(rng, k));
        const Word y = t % 2 == 0 ? x : book.code.encode(random_word(rng, k));
        const DnaSeq a = book.image(x);
        const DnaSeq b = book.image(y);
        const std::size_t d = hamming_distance(a, rc ? reverse_complement(b) : reverse(b));
        if (d != 0 && (!best || d < best->first))
            best = {d, {x, y}};
    }
    const std::size_t upper = best ? best->first : std::numeric_limits<std::size_t>::max();
    std::optional<std::pair<Word, Word>> witness;
    if (best)
        witness = best->second;
    const bool block_bound = rc && !book.spec.apply_f && !book.augmented;
    return DistanceCert::make_bounded(metric, block_bound ? std::min(upper, book.code.length()) : 0, upper, witness,
                                      block_bound ? "lower from block separation, upper from sampled pairs"
                                                  : "no lower bound proven; upper from sampled pairs");
}

DistanceCert implicit_cert(const DnaCodebook& book, Metric metric, const DistanceOptions& options) {
    const bool plain = !book.spec.apply_f && !book.augmented;
    switch (metric) {
    case Metric::HammingZ11:
    case Metric::Induced:
    case Metric::DnaHammingAfterF: return min_distance(book.code, metric, options);
    case Metric::Reverse:
    case Metric::ReverseComplement:
        return plain ? min_distance(book.code, metric, options) : sampled_transform_cert(book, metric, options);
    case Metric::DnaHamming: {
        DistanceCert cert =
            min_distance(book.code, book.spec.apply_f ? Metric::DnaHammingAfterF : Metric::DnaHamming, options);
        cert.metric = Metric::DnaHamming;
        if (book.augmented) {
            // complement members differ from every block in each position block
            const std::size_t lower = book.spec.apply_f ? 0 : std::min(cert.lower, book.code.length());
            cert = DistanceCert::make_bounded(Metric::DnaHamming, lower, cert.upper, cert.witness,
                                              cert.basis + "; complement pairs not sampled");
        }
        return cert;
    }
    }
    return min_distance(book.code, metric, options);
}

} // namespace

void certify_distances(DnaCodebook& book, const std::vector<Metric>& metrics, const DistanceOptions& opts) {
    const DistanceOptions options = book_options(book, opts);
    for (const Metric metric : metrics) {
        DistanceCert cert;
        const bool book_level =
            metric == Metric::DnaHamming || metric == Metric::Reverse || metric == Metric::ReverseComplement;
        const bool transformed = metric != Metric::DnaHamming;
        if (book_level && book.explicit_book() &&
            pair_count(book.sequences->size(), transformed) <= options.pair_budget) {
            const PairMode mode = metric == Metric::Reverse             ? PairMode::Reverse
                                  : metric == Metric::ReverseComplement ? PairMode::ReverseComplement
                                                                        : PairMode::Direct;
            cert = explicit_cert(book, metric, mode, options.threads);
        } else if (book_level) {
            cert = implicit_cert(book, metric, options);
        } else {
            cert = min_distance(book.code, metric, options);
        }
        book.distances.insert_or_assign(metric, std::move(cert));
    }
}

const char* to_string(CheckStatus s) noexcept {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Sampled: return "sampled";
    case CheckStatus::Skipped: return "skipped";
    }
    return "unknown";
}

const ConstraintResult* ConstraintReport::find(std::string_view name) const noexcept {
    for (const auto& r : results)
        if (r.name == name)
            return &r;
    return nullptr;
}

bool ConstraintReport::any_hard_failure() const noexcept {
    return std::any_of(results.begin(), results.end(), [](const ConstraintResult& r) { return r.failed(); });
}

namespace {

constexpr long long kNotChecked = std::numeric_limits<long long>::min();

struct MemberEval {
    long long run = 0;
    long long stem = kNotChecked;
    long long energy_slack = kNotChecked; ///< E + 4 * blocks
    std::size_t gc = 0;
    std::size_t length = 0;
};

struct Member {
    DnaSeq seq;
    std::optional<Word> codeword;
    bool energy_applicable = false;
};

struct CheckPlan {
    Thresholds thresholds;
    bool runs = true;
    bool stems = true;
    bool energy = true;
    std::size_t energy_max_length = 256;
    std::size_t stem_max_length = 4096;
    unsigned threads = 0;
    bool claimed = false;     ///< runs/stems claimed by the construction
    bool runs_claimed = false;
};

MemberEval evaluate(const Member& m, const CheckPlan& plan, const EnergyModel& model) {
    MemberEval e;
    e.length = m.seq.size();
    e.gc = gc_content(m.seq).gc;
    if (plan.runs)
        e.run = static_cast<long long>(max_homopolymer_run(m.seq).length);
    if (plan.stems && m.seq.size() <= plan.stem_max_length)
        e.stem = static_cast<long long>(max_stem_value(m.seq.view(), model));
    if (plan.energy && m.energy_applicable && m.seq.size() <= plan.energy_max_length)
        e.energy_slack = min_free_energy(m.seq, model) + 4 * static_cast<long long>(m.seq.size() / kBlockLength);
    return e;
}

ConstraintWitness witness_for(std::size_t index, const Member& m) {
    return ConstraintWitness{index, m.codeword, m.seq, {}};
}

template <typename GetMember>
ConstraintReport run_checks(std::size_t count, GetMember&& get, const CheckPlan& plan, bool exhaustive,
                            std::uint64_t seed) {
    if (count == 0)
        fail(ErrorCode::EmptyInput, "no sequences to verify");
    const EnergyModel model = EnergyModel::nussinov_jackson();
    std::vector<MemberEval> evals(count);
    const unsigned threads = plan.threads == 0 ? default_thread_count() : plan.threads;
    parallel_chunks(0, count, std::min<std::size_t>(count, 256), threads,
                    [&](std::size_t, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t i = lo; i < hi; ++i)
                            evals[i] = evaluate(get(i), plan, model);
                    });

    ConstraintReport report;
    report.seed = seed;
    report.exhaustive = exhaustive;
    const CheckStatus ok = exhaustive ? CheckStatus::Pass : CheckStatus::Sampled;

    // runs
    {
        ConstraintResult r;
        r.name = "homopolymer_run";
        r.threshold = static_cast<long long>(plan.thresholds.max_run);
        r.claimed = plan.runs_claimed;
        if (!plan.runs) {
            r.note = "disabled";
        } else {
            std::size_t worst = 0;
            for (std::size_t i = 1; i < count; ++i)
                if (evals[i].run > evals[worst].run)
                    worst = i;
            r.worst_value = evals[worst].run;
            r.sample_count = count;
            r.status = r.worst_value > r.threshold ? CheckStatus::Fail : ok;
            if (r.failed()) {
                const Member m = get(worst);
                const Run run = max_homopolymer_run(m.seq);
                r.witness = witness_for(worst, m);
                r.witness->positions.push_back({run.start + 1, run.start + run.length});
            }
        }
        report.results.push_back(std::move(r));
    }

    // stems
    {
        ConstraintResult r;
        r.name = "stem_length";
        r.threshold = static_cast<long long>(plan.thresholds.max_stem);
        r.claimed = plan.claimed;
        std::optional<std::size_t> worst;
        std::uint64_t checked = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (evals[i].stem == kNotChecked)
                continue;
            ++checked;
            if (!worst || evals[i].stem > evals[*worst].stem)
                worst = i;
        }
        r.sample_count = checked;
        if (!plan.stems) {
            r.note = "disabled";
        } else if (!worst) {
            r.note = "sequences longer than " + std::to_string(plan.stem_max_length);
        } else {
            r.worst_value = evals[*worst].stem;
            r.status = r.worst_value > r.threshold ? CheckStatus::Fail : ok;
            if (checked < count && r.status == CheckStatus::Pass)
                r.status = CheckStatus::Sampled;
            if (r.failed()) {
                const Member m = get(*worst);
                r.witness = witness_for(*worst, m);
                r.witness->positions = max_stem_length(m.seq, model).witness;
            }
        }
        report.results.push_back(std::move(r));
    }

    // energy floor, on alphabet-block sequences only
    {
        ConstraintResult r;
        r.name = "energy_floor";
        r.claimed = plan.claimed;
        std::optional<std::size_t> worst;
        std::uint64_t checked = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (evals[i].energy_slack == kNotChecked)
                continue;
            ++checked;
            if (!worst || evals[i].energy_slack < evals[*worst].energy_slack)
                worst = i;
        }
        r.sample_count = checked;
        if (!plan.energy) {
            r.note = "disabled";
        } else if (!worst) {
            r.note = "applies to unflipped alphabet-block sequences up to length " + std::to_string(plan.energy_max_length);
        } else {
            const long long floor = -4 * static_cast<long long>(evals[*worst].length / kBlockLength);
            r.threshold = floor;
            r.worst_value = evals[*worst].energy_slack + floor;
            r.status = evals[*worst].energy_slack < 0 ? CheckStatus::Fail : ok;
            if (checked < count && r.status == CheckStatus::Pass)
                r.status = CheckStatus::Sampled;
            if (r.failed())
                r.witness = witness_for(*worst, get(*worst));
            if (checked < count)
                r.note = "checked on " + std::to_string(checked) + " of " + std::to_string(count) + " sequences";
        }
        report.results.push_back(std::move(r));
    }

    double sum = 0.0;
    report.gc.min = 1.0;
    report.gc.max = 0.0;
    for (const auto& e : evals) {
        const double v = static_cast<double>(e.gc) / static_cast<double>(e.length);
        report.gc.min = std::min(report.gc.min, v);
        report.gc.max = std::max(report.gc.max, v);
        sum += v;
    }
    report.gc.mean = sum / static_cast<double>(count);
    return report;
}

} // namespace

ConstraintReport verify_constraints(const DnaCodebook& book) {
    const CodebookSpec& spec = book.spec;
    CheckPlan plan;
    plan.thresholds = spec.thresholds;
    plan.runs = spec.check_runs;
    plan.stems = spec.check_stems;
    plan.energy = spec.check_energy;
    plan.energy_max_length = spec.energy_max_length;
    plan.stem_max_length = spec.stem_max_length;
    plan.threads = spec.threads;
    plan.claimed = true;
    plan.runs_claimed = spec.apply_f;

    if (book.explicit_book()) {
        const auto& seqs = *book.sequences;
        const auto& words = *book.words;
        auto get = [&](std::size_t i) {
            const bool original = i < words.size();
            return Member{seqs[i], original ? std::optional<Word>(words[i]) : std::optional<Word>(words[i - words.size()]),
                          original && !spec.apply_f};
        };
        return run_checks(seqs.size(), get, plan, true, spec.seed);
    }

    // implicit book: a fixed, seeded sample of members
    Rng rng(spec.seed);
    std::vector<Member> sample;
    sample.reserve(spec.sample_count);
    for (std::uint64_t t = 0; t < spec.sample_count; ++t) {
        const Word w = book.code.encode(random_word(rng, book.code.dimension()));
        const bool comp = book.augmented && uniform_below(rng, 2) == 1;
        DnaSeq x = book.image(w);
        sample.push_back(Member{comp ? complement(x) : std::move(x), w, !comp && !spec.apply_f});
    }
    return run_checks(sample.size(), [&](std::size_t i) { return sample[i]; }, plan, false, spec.seed);
}

ConstraintReport verify_sequences(const std::vector<DnaSeq>& seqs, const Thresholds& thresholds,
                                  std::size_t energy_max_length, std::size_t stem_max_length, unsigned threads) {
    CheckPlan plan;
    plan.thresholds = thresholds;
    plan.energy_max_length = energy_max_length;
    plan.stem_max_length = stem_max_length;
    plan.threads = threads;
    auto get = [&](std::size_t i) { return Member{seqs[i], std::nullopt, is_block_word(seqs[i])}; };
    return run_checks(seqs.size(), get, plan, true, 0);
}

std::vector<RateEntry> rate_table() {
    std::vector<RateEntry> rows;
    auto computed = [&](std::string name, const LinearCode& code, bool augmented) {
        const std::size_t n_dna = 3 * code.length();
        rows.push_back(RateEntry{std::move(name), n_dna, code.dimension(),
                                 code_rate(code.dimension(), augmented, n_dna), "yes", "<4", "yes", "computed"});
    };
    auto external = [&](std::string name, std::size_t n_dna, double rate, std::string p1, std::string p2,
                        std::string p3) {
        rows.push_back(RateEntry{std::move(name), n_dna, 0, rate, std::move(p1), std::move(p2), std::move(p3),
                                 "external"});
    };

    external("example 9 (lit.)", 0, 0.14937, "no", ">4", "no");
    external("example 2 (lit.)", 0, 0.25850, "yes", ">4", "no");
    external("example 4 (lit.)", 0, 0.40105, "yes", ">4", "no");
    external("(8,256,4) code (lit.)", 8, 0.50000, "no", "no", "yes");
    external("(8,244,4) code (lit.)", 8, 0.48796, "no", "no", "yes");
    external("f(phi(H7)) (lit.)", 0, 0.58027, "yes", "<4", "yes");
    computed("f(phi(H5)) over Z11", hamming(5), false);
    external("C u C^c, C=f(phi(H2)) (lit.)", 0, 0.42865, "yes", "<4", "yes");
    const LinearCode h2 = hamming(2);
    computed("C u C^c, C=f(phi(H2)) over Z11", h2, true);
    external("f(phi(H2)) (lit.)", 0, 0.42865, "yes", "<4", "yes");
    computed("f(phi(H2)) over Z11", h2, false);
    external("C u C^c, C=f(phi(C2)) (lit.)", 0, 0.35274, "yes", "<4", "yes");
    external("f(phi(C2)) (lit.)", 0, 0.29024, "yes", "<4", "yes");
    computed("f(phi(C2)) over Z11", family1(2), false);
    external("f(phi(RS(10,8,3))) (lit.)", 0, 0.145120, "yes", "<4", "yes");
    computed("f(phi(RS(10,8,3))) over Z11", reed_solomon(3), false);
    rows.push_back(RateEntry{"rate factor log4(11)/3", 0, 0, rate_factor(), "", "", "", "computed"});
    return rows;
}

} // namespace helix
