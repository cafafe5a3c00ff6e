// SPDX-License-Identifier: Apache-2.0

#include "helix/helix.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "helix/codebook.hpp"
#include "helix/error.hpp"
#include "helix/fasta.hpp"
#include "helix/folding.hpp"
#include "helix/report.hpp"
#include "helix/sigma_map.hpp"
#include "helix/version.hpp"

struct helix_codebook {
    helix::DnaCodebook book;
    std::optional<helix::ConstraintReport> constraints;
};

namespace {

thread_local std::string last_error;

helix_status to_status(helix::ErrorCode code) {
    using helix::ErrorCode;
    switch (code) {
    case ErrorCode::DivisionByZero: return HELIX_E_DIVISION_BY_ZERO;
    case ErrorCode::ShapeError: return HELIX_E_SHAPE;
    case ErrorCode::EmptyInput: return HELIX_E_EMPTY_INPUT;
    case ErrorCode::BadArgument: return HELIX_E_BAD_ARGUMENT;
    case ErrorCode::NotInAlphabet: return HELIX_E_NOT_IN_ALPHABET;
    case ErrorCode::BudgetExceeded: return HELIX_E_BUDGET_EXCEEDED;
    case ErrorCode::GuardViolated: return HELIX_E_GUARD_VIOLATED;
    case ErrorCode::ParseError: return HELIX_E_PARSE;
    case ErrorCode::IoError: return HELIX_E_IO;
    }
    return HELIX_E_INTERNAL;
}

helix_status set_error(helix_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename Fn>
helix_status guarded(Fn&& fn) noexcept {
    try {
        last_error.clear();
        return fn();
    } catch (const helix::Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(HELIX_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(HELIX_E_INTERNAL, e.what());
    } catch (...) {
        return set_error(HELIX_E_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

helix_status null_arg(const char* what) { return set_error(HELIX_E_BAD_ARGUMENT, std::string(what) + " is NULL"); }

std::optional<helix::Metric> to_metric(helix_metric m) {
    switch (m) {
    case HELIX_METRIC_HAMMING_Z11: return helix::Metric::HammingZ11;
    case HELIX_METRIC_INDUCED: return helix::Metric::Induced;
    case HELIX_METRIC_DNA_HAMMING_AFTER_F: return helix::Metric::DnaHammingAfterF;
    case HELIX_METRIC_REVERSE: return helix::Metric::Reverse;
    case HELIX_METRIC_REVERSE_COMPLEMENT: return helix::Metric::ReverseComplement;
    case HELIX_METRIC_DNA_HAMMING: return helix::Metric::DnaHamming;
    }
    return std::nullopt;
}

std::vector<helix::DnaSeq> alphabet_blocks() {
    std::vector<helix::DnaSeq> blocks;
    for (const auto b : helix::kTrinucleotideBlocks)
        blocks.emplace_back(b);
    return blocks;
}

} // namespace

extern "C" {

const char* helix_last_error(void) { return last_error.c_str(); }

const char* helix_status_name(helix_status status) {
    switch (status) {
    case HELIX_OK: return "ok";
    case HELIX_E_DIVISION_BY_ZERO: return "division_by_zero";
    case HELIX_E_SHAPE: return "shape_error";
    case HELIX_E_EMPTY_INPUT: return "empty_input";
    case HELIX_E_BAD_ARGUMENT: return "bad_argument";
    case HELIX_E_NOT_IN_ALPHABET: return "not_in_alphabet";
    case HELIX_E_BUDGET_EXCEEDED: return "budget_exceeded";
    case HELIX_E_GUARD_VIOLATED: return "guard_violated";
    case HELIX_E_PARSE: return "parse_error";
    case HELIX_E_IO: return "io_error";
    case HELIX_E_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* helix_version(void) { return helix::kToolVersion; }

void helix_string_free(char* s) { std::free(s); }

void helix_codebook_options_init(helix_codebook_options* options) {
    if (!options)
        return;
    const helix::CodebookSpec defaults;
    options->family = "family1:k=2";
    options->apply_f = 0;
    options->augment = 0;
    options->seed = defaults.seed;
    options->max_run = static_cast<uint32_t>(defaults.thresholds.max_run);
    options->max_stem = static_cast<uint32_t>(defaults.thresholds.max_stem);
    options->flip_threshold = static_cast<uint32_t>(defaults.flip_threshold);
    options->sample_count = defaults.sample_count;
    options->enumeration_cap = defaults.enumeration_cap;
    options->threads = 0;
}

helix_status helix_codebook_build(const helix_codebook_options* options, helix_codebook** out) {
    if (!options || !out)
        return null_arg("options/out");
    if (!options->family)
        return null_arg("family");
    *out = nullptr;
    return guarded([&] {
        helix::CodebookSpec spec;
        spec.family = helix::parse_family(options->family);
        spec.apply_f = options->apply_f != 0;
        spec.augment_complement = options->augment != 0;
        spec.seed = options->seed;
        spec.thresholds.max_run = options->max_run;
        spec.thresholds.max_stem = options->max_stem;
        spec.flip_threshold = options->flip_threshold;
        spec.sample_count = options->sample_count;
        spec.enumeration_cap = options->enumeration_cap;
        spec.threads = options->threads;
        *out = new helix_codebook{helix::build(spec), std::nullopt};
        return HELIX_OK;
    });
}

void helix_codebook_free(helix_codebook* book) { delete book; }

helix_status helix_codebook_get_info(const helix_codebook* book, helix_codebook_info* out) {
    if (!book || !out)
        return null_arg("book/out");
    const auto& b = book->book;
    out->code_length = b.code.length();
    out->dna_length = b.dna_length;
    out->size_exponent = b.size_exponent;
    out->augmented = b.augmented ? 1 : 0;
    out->explicit_book = b.explicit_book() ? 1 : 0;
    out->sequence_count = b.explicit_book() ? b.sequences->size() : 0;
    out->rate = b.rate;
    return HELIX_OK;
}

helix_status helix_codebook_certify(helix_codebook* book) {
    if (!book)
        return null_arg("book");
    return guarded([&] {
        using helix::Metric;
        std::vector<Metric> metrics{Metric::HammingZ11, Metric::Induced, Metric::DnaHamming, Metric::Reverse,
                                    Metric::ReverseComplement};
        if (book->book.spec.apply_f)
            metrics.push_back(Metric::DnaHammingAfterF);
        helix::DistanceOptions options;
        options.enumeration_cap = book->book.spec.enumeration_cap;
        options.seed = book->book.spec.seed;
        helix::certify_distances(book->book, metrics, options);
        return HELIX_OK;
    });
}

helix_status helix_codebook_distance(const helix_codebook* book, helix_metric metric, uint64_t* lower,
                                     uint64_t* upper, int* exact) {
    if (!book)
        return null_arg("book");
    const auto m = to_metric(metric);
    if (!m)
        return set_error(HELIX_E_BAD_ARGUMENT, "unknown metric");
    const auto it = book->book.distances.find(*m);
    if (it == book->book.distances.end())
        return set_error(HELIX_E_BAD_ARGUMENT, std::string("metric not certified: ") + helix::to_string(*m));
    if (lower)
        *lower = it->second.lower;
    if (upper)
        *upper = it->second.upper;
    if (exact)
        *exact = it->second.exact() ? 1 : 0;
    return HELIX_OK;
}

helix_status helix_codebook_verify(helix_codebook* book, int* hard_failure) {
    if (!book)
        return null_arg("book");
    return guarded([&] {
        book->constraints = helix::verify_constraints(book->book);
        if (hard_failure)
            *hard_failure = book->constraints->any_hard_failure() ? 1 : 0;
        return HELIX_OK;
    });
}

helix_status helix_codebook_write_fasta(const helix_codebook* book, const char* path) {
    if (!book || !path)
        return null_arg("book/path");
    return guarded([&] {
        const auto& b = book->book;
        if (!b.explicit_book())
            helix::fail(helix::ErrorCode::BudgetExceeded,
                        "codebook has 11^" + std::to_string(b.size_exponent) +
                            " codewords, beyond the enumeration cap; no FASTA written");
        const auto& words = *b.words;
        const auto& seqs = *b.sequences;
        std::vector<helix::FastaRecord> records;
        records.reserve(seqs.size());
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            const bool comp = i >= words.size();
            const auto& w = comp ? words[i - words.size()] : words[i];
            records.push_back({helix::codeword_header(i, w, b.spec.apply_f, comp), seqs[i]});
        }
        helix::write_file_atomic(path, helix::to_fasta(records));
        return HELIX_OK;
    });
}

helix_status helix_codebook_sequence(const helix_codebook* book, size_t index, char** out) {
    if (!book || !out)
        return null_arg("book/out");
    return guarded([&] {
        const auto& b = book->book;
        if (!b.explicit_book())
            helix::fail(helix::ErrorCode::BudgetExceeded, "implicit codebook has no sequence list");
        if (index >= b.sequences->size())
            helix::fail(helix::ErrorCode::BadArgument, "index out of range");
        *out = dup((*b.sequences)[index].str());
        return HELIX_OK;
    });
}

helix_status helix_codebook_report_json(const helix_codebook* book, int timing, double elapsed_seconds, char** out) {
    if (!book || !out)
        return null_arg("book/out");
    return guarded([&] {
        helix::ReportOptions options{timing != 0, elapsed_seconds};
        *out = dup(helix::codebook_report_json(book->book, book->constraints, options));
        return HELIX_OK;
    });
}

helix_status helix_verify_fasta(const char* path, uint32_t max_run, uint32_t max_stem, uint32_t threads,
                                char** report_json, int* hard_failure) {
    if (!path || !report_json)
        return null_arg("path/report_json");
    return guarded([&] {
        const auto records = helix::read_fasta_file(path);
        if (records.empty())
            helix::fail(helix::ErrorCode::EmptyInput, std::string(path) + ": no FASTA records");
        std::vector<helix::DnaSeq> seqs;
        seqs.reserve(records.size());
        for (const auto& r : records)
            seqs.push_back(r.sequence);
        const helix::Thresholds thresholds{max_run, max_stem};
        const auto report = helix::verify_sequences(seqs, thresholds, 256, 4096, threads);
        *report_json = dup(helix::constraint_report_json(report, seqs.size()));
        if (hard_failure)
            *hard_failure = report.any_hard_failure() ? 1 : 0;
        return HELIX_OK;
    });
}

helix_status helix_fold_fasta(const char* path, char** report_json) {
    if (!path || !report_json)
        return null_arg("path/report_json");
    *report_json = nullptr;
    return guarded([&] {
        const auto records = helix::read_fasta_file(path);
        if (records.empty())
            throw helix::Error(helix::ErrorCode::EmptyInput, std::string("no records in ") + path);
        *report_json = dup(helix::fold_records_json(records));
        return HELIX_OK;
    });
}

helix_status helix_fold(const char* sequence, long long* energy, size_t* max_stem, char** report_json) {
    if (!sequence)
        return null_arg("sequence");
    return guarded([&] {
        const helix::DnaSeq x(sequence);
        const auto report = helix::fold(x);
        if (energy)
            *energy = report.min_free_energy;
        if (max_stem)
            *max_stem = report.max_stem_length;
        if (report_json)
            *report_json = dup(helix::fold_report_json(x, report));
        return HELIX_OK;
    });
}

helix_status helix_phi(const char* z11_word, char** dna) {
    if (!z11_word || !dna)
        return null_arg("word/dna");
    return guarded([&] {
        *dna = dup(helix::phi(helix::Word::parse(z11_word)).str());
        return HELIX_OK;
    });
}

helix_status helix_phi_inv(const char* dna, char** z11_word) {
    if (!dna || !z11_word)
        return null_arg("dna/word");
    return guarded([&] {
        *z11_word = dup(helix::phi_inv(helix::DnaSeq(dna)).str());
        return HELIX_OK;
    });
}

helix_status helix_flip(const char* dna, uint32_t threshold, char** out) {
    if (!dna || !out)
        return null_arg("dna/out");
    return guarded([&] {
        if (threshold < 2)
            helix::fail(helix::ErrorCode::BadArgument, "flip threshold must be at least 2");
        *out = dup(helix::f_flip(helix::DnaSeq(dna), threshold).str());
        return HELIX_OK;
    });
}

void helix_certify_options_init(helix_certify_options* options) {
    if (!options)
        return;
    const helix::CertifyOptions defaults;
    options->window = 6;
    options->max_stem = 2;
    options->budget = defaults.budget;
    options->resume_token = nullptr;
    options->threads = 0;
    options->timing = 0;
}

helix_status helix_certify_alphabet(const helix_certify_options* options, char** report_json, int* within_limit,
                                    char** resume_token) {
    if (!options || !report_json)
        return null_arg("options/report_json");
    *report_json = nullptr;
    if (resume_token)
        *resume_token = nullptr;
    return guarded([&] {
        helix::CertifyOptions opts;
        opts.budget = options->budget;
        opts.threads = options->threads;
        if (options->resume_token && *options->resume_token)
            helix::parse_resume_token(options->resume_token, opts);
        const auto alphabet = alphabet_blocks();
        const auto report = helix::certify_concatenations(alphabet, options->window, options->max_stem, opts,
                                                          helix::EnergyModel::nussinov_jackson(), "S11");
        helix::ReportOptions ro{options->timing != 0, report.elapsed_seconds};
        *report_json = dup(helix::cert_report_json(report, alphabet, ro));
        if (within_limit)
            *within_limit = report.within_limit() ? 1 : 0;
        if (!report.complete) {
            if (resume_token)
                *resume_token = dup(report.resume_token());
            return set_error(HELIX_E_BUDGET_EXCEEDED, "budget exhausted after " +
                                                          std::to_string(report.enumerated_count) +
                                                          " windows; resume with " + report.resume_token());
        }
        return HELIX_OK;
    });
}

helix_status helix_rates_csv(char** out) {
    if (!out)
        return null_arg("out");
    return guarded([&] {
        *out = dup(helix::rates_csv(helix::rate_table()));
        return HELIX_OK;
    });
}

} // extern "C"
