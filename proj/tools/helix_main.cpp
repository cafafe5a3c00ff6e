// SPDX-License-Identifier: Apache-2.0
//
// helix: build and certify DNA codebooks from codes over Z11.
// Exit codes: 0 ok, 1 constraint violated, 2 invalid input, 3 budget exceeded.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "helix/helix.h"

namespace {

enum Exit { kOk = 0, kViolation = 1, kInvalid = 2, kBudget = 3 };

struct CString {
    char* p = nullptr;
    ~CString() { helix_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct BookDeleter {
    void operator()(helix_codebook* b) const { helix_codebook_free(b); }
};
using BookPtr = std::unique_ptr<helix_codebook, BookDeleter>;

int exit_for(helix_status s) {
    switch (s) {
    case HELIX_OK: return kOk;
    case HELIX_E_BUDGET_EXCEEDED: return kBudget;
    default: return kInvalid;
    }
}

int report_error(const char* what, helix_status s) {
    std::cerr << "helix: " << what << ": " << helix_status_name(s) << ": " << helix_last_error() << "\n";
    return exit_for(s);
}

// stdout when path is empty, otherwise an atomic file write
bool emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return true;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            return false;
        out << text;
        if (!out.flush())
            return false;
    }
    return std::rename(tmp.c_str(), path.c_str()) == 0;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct ConstructArgs {
    std::string family;
    bool apply_f = false;
    bool augment = false;
    std::string out;
    std::string report;
    uint64_t seed = 1;
    uint32_t max_run = 4;
    uint32_t max_stem = 2;
    uint32_t flip_threshold = 4;
    uint64_t samples = 10000;
    uint64_t budget = 200000;
    bool timing = false;
};

int cmd_construct(const ConstructArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    helix_codebook_options opts;
    helix_codebook_options_init(&opts);
    opts.family = a.family.c_str();
    opts.apply_f = a.apply_f;
    opts.augment = a.augment;
    opts.seed = a.seed;
    opts.max_run = a.max_run;
    opts.max_stem = a.max_stem;
    opts.flip_threshold = a.flip_threshold;
    opts.sample_count = a.samples;
    opts.enumeration_cap = a.budget;

    helix_codebook* raw = nullptr;
    helix_status s = helix_codebook_build(&opts, &raw);
    if (s != HELIX_OK)
        return report_error("construct", s);
    BookPtr book(raw);

    if ((s = helix_codebook_certify(book.get())) != HELIX_OK)
        return report_error("certify", s);
    if ((s = helix_codebook_verify(book.get(), nullptr)) != HELIX_OK)
        return report_error("verify", s);

    int code = kOk;
    if (!a.out.empty()) {
        s = helix_codebook_write_fasta(book.get(), a.out.c_str());
        if (s != HELIX_OK)
            code = report_error("write FASTA", s);
    }

    CString report;
    s = helix_codebook_report_json(book.get(), a.timing, seconds_since(start), &report.p);
    if (s != HELIX_OK)
        return report_error("report", s);
    if (!emit(a.report, report.str())) {
        std::cerr << "helix: cannot write " << a.report << "\n";
        return kInvalid;
    }
    return code;
}

int cmd_verify(const std::string& input, uint32_t max_run, uint32_t max_stem, const std::string& report_path) {
    CString report;
    int hard = 0;
    const helix_status s = helix_verify_fasta(input.c_str(), max_run, max_stem, 0, &report.p, &hard);
    if (s != HELIX_OK)
        return report_error("verify", s);
    if (!emit(report_path, report.str())) {
        std::cerr << "helix: cannot write " << report_path << "\n";
        return kInvalid;
    }
    return hard ? kViolation : kOk;
}

int cmd_fold(const std::string& seq, const std::string& fasta) {
    CString report;
    const helix_status s = fasta.empty() ? helix_fold(seq.c_str(), nullptr, nullptr, &report.p)
                                         : helix_fold_fasta(fasta.c_str(), &report.p);
    if (s != HELIX_OK)
        return report_error("fold", s);
    std::cout << report.str();
    return kOk;
}

int cmd_certify(uint32_t window, uint32_t max_stem, uint64_t budget, const std::string& resume,
                const std::string& report_path, bool timing) {
    helix_certify_options opts;
    helix_certify_options_init(&opts);
    opts.window = window;
    opts.max_stem = max_stem;
    opts.budget = budget;
    opts.resume_token = resume.empty() ? nullptr : resume.c_str();
    opts.timing = timing;
    CString report;
    CString token;
    int within = 0;
    const helix_status s = helix_certify_alphabet(&opts, &report.p, &within, &token.p);
    if (report.p && !emit(report_path, report.str())) {
        std::cerr << "helix: cannot write " << report_path << "\n";
        return kInvalid;
    }
    if (s == HELIX_E_BUDGET_EXCEEDED) {
        std::cerr << "helix: budget exhausted; resume token: " << token.str() << "\n";
        return kBudget;
    }
    if (s != HELIX_OK)
        return report_error("certify-alphabet", s);
    return within ? kOk : kViolation;
}

int cmd_rates(const std::string& out) {
    CString csv;
    const helix_status s = helix_rates_csv(&csv.p);
    if (s != HELIX_OK)
        return report_error("rates", s);
    if (!emit(out, csv.str())) {
        std::cerr << "helix: cannot write " << out << "\n";
        return kInvalid;
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DNA codebooks from codes over Z11"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(helix_version()));

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a codebook, certify it, write FASTA and a report");
    construct->add_option("--family", ca.family, "family1:k=K | hamming:r=R | rs:delta=D[,alpha=A,a=S]")->required();
    construct->add_flag("--apply-f", ca.apply_f, "apply the run-breaking map");
    construct->add_flag("--augment", ca.augment, "add the complement of every codeword");
    construct->add_option("--out", ca.out, "FASTA output (enumerable books only)");
    construct->add_option("--report", ca.report, "JSON report path (default stdout)");
    construct->add_option("--seed", ca.seed, "seed for sampled checks")->capture_default_str();
    construct->add_option("--max-run", ca.max_run)->capture_default_str()->check(CLI::PositiveNumber);
    construct->add_option("--max-stem", ca.max_stem)->capture_default_str()->check(CLI::PositiveNumber);
    construct->add_option("--flip-threshold", ca.flip_threshold)->capture_default_str()->check(CLI::Range(2u, 1u << 30));
    construct->add_option("--samples", ca.samples, "sample size for non-enumerable books")->capture_default_str();
    construct->add_option("--budget", ca.budget, "largest codebook enumerated")->capture_default_str();
    construct->add_flag("--timing", ca.timing, "include elapsed seconds in the report");

    std::string verify_input;
    std::string verify_report;
    uint32_t verify_run = 4;
    uint32_t verify_stem = 2;
    auto* verify = app.add_subcommand("verify", "check runs, stems and energy of FASTA records");
    verify->add_option("fasta", verify_input, "input FASTA")->required();
    verify->add_option("--report", verify_report, "JSON report path (default stdout)");
    verify->add_option("--max-run", verify_run)->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--max-stem", verify_stem)->capture_default_str()->check(CLI::PositiveNumber);

    std::string fold_seq;
    std::string fold_fasta;
    auto* fold = app.add_subcommand("fold", "free energy and longest stem of a sequence or FASTA file");
    auto* seq_opt = fold->add_option("--seq", fold_seq, "sequence over ACGT");
    auto* fasta_opt = fold->add_option("fasta", fold_fasta, "FASTA input, one report entry per record");
    seq_opt->excludes(fasta_opt);
    fold->require_option(1);

    uint32_t window = 6;
    uint32_t cert_stem = 2;
    uint64_t cert_budget = 50'000'000;
    std::string resume;
    std::string cert_report;
    bool cert_timing = false;
    auto* certify = app.add_subcommand("certify-alphabet", "longest stem over all block windows");
    certify->add_option("--window", window)->capture_default_str()->check(CLI::PositiveNumber);
    certify->add_option("--max-stem", cert_stem)->capture_default_str();
    certify->add_option("--budget", cert_budget, "windows enumerated in this run")->capture_default_str();
    certify->add_option("--resume", resume, "token printed by an interrupted run");
    certify->add_option("--report", cert_report, "JSON report path (default stdout)");
    certify->add_flag("--timing", cert_timing, "include elapsed seconds in the report");

    std::string rates_out;
    auto* rates = app.add_subcommand("rates", "code-rate table as CSV");
    rates->add_option("--out", rates_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    if (construct->parsed())
        return cmd_construct(ca);
    if (verify->parsed())
        return cmd_verify(verify_input, verify_run, verify_stem, verify_report);
    if (fold->parsed())
        return cmd_fold(fold_seq, fold_fasta);
    if (certify->parsed())
        return cmd_certify(window, cert_stem, cert_budget, resume, cert_report, cert_timing);
    if (rates->parsed())
        return cmd_rates(rates_out);
    return kInvalid;
}
