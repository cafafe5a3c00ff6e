// SPDX-License-Identifier: Apache-2.0

#include "helix/report.hpp"

#include <cstdio>

#include "json.hpp"

#include "helix/version.hpp"

namespace helix {

using nlohmann::json;

namespace {

json positions_json(const std::vector<PairPos>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs)
        out.push_back(json::array({a, b}));
    return out;
}

json cert_json(const DistanceCert& c) {
    json j;
    j["kind"] = c.exact() ? "exact" : "bounded";
    j["lower"] = c.lower;
    j["upper"] = c.upper;
    j["basis"] = c.basis;
    if (c.witness) {
        json w;
        w["first"] = c.witness->first.str();
        w["second"] = c.witness->second.str();
        if (c.witness_indices)
            w["indices"] = json::array({c.witness_indices->first, c.witness_indices->second});
        j["witness"] = w;
    } else if (c.witness_indices) {
        j["witness"] = json{{"indices", json::array({c.witness_indices->first, c.witness_indices->second})}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

json constraints_json(const ConstraintReport& report) {
    json j;
    for (const auto& r : report.results) {
        json e;
        e["status"] = to_string(r.status);
        e["threshold"] = r.threshold;
        e["worst_value"] = r.worst_value;
        e["sample_count"] = r.sample_count;
        e["claimed"] = r.claimed;
        e["severity"] = !r.failed() ? "none" : r.claimed ? "errata" : "violation";
        if (!r.note.empty())
            e["note"] = r.note;
        if (r.witness) {
            json w;
            w["index"] = r.witness->index;
            w["sequence"] = r.witness->sequence.str();
            w["positions"] = positions_json(r.witness->positions);
            if (r.witness->codeword)
                w["codeword"] = r.witness->codeword->str();
            e["witness"] = w;
        }
        j[r.name] = e;
    }
    j["gc_content"] = json{{"min", report.gc.min}, {"max", report.gc.max}, {"mean", report.gc.mean}};
    j["exhaustive"] = report.exhaustive;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

std::optional<FlipIntervalCheck> flip_interval_check(const DnaCodebook& book) {
    if (!book.spec.apply_f)
        return std::nullopt;
    const auto induced = book.distances.find(Metric::Induced);
    const auto flipped = book.distances.find(Metric::DnaHammingAfterF);
    if (induced == book.distances.end() || flipped == book.distances.end())
        return std::nullopt;
    const std::size_t n = book.dna_length;
    FlipIntervalCheck check;
    check.claimed = {flip_distance_interval(n, induced->second.lower).lower,
                     flip_distance_interval(n, induced->second.upper).upper};
    check.measured_lower = flipped->second.lower;
    check.measured_upper = flipped->second.upper;
    check.measured_exact = flipped->second.exact();
    if (induced->second.exact() && flipped->second.exact())
        check.holds = check.claimed.lower <= check.measured_upper && check.measured_upper <= check.claimed.upper;
    else if (flipped->second.upper < check.claimed.lower)
        check.holds = false;
    return check;
}

std::string codebook_report_json(const DnaCodebook& book, const std::optional<ConstraintReport>& constraints,
                                 const ReportOptions& options) {
    json j;
    j["tool_version"] = kToolVersion;
    j["spec"] = json{{"family", to_string(book.spec.family)},
                     {"apply_f", book.spec.apply_f},
                     {"augment_complement", book.spec.augment_complement},
                     {"flip_threshold", book.spec.flip_threshold},
                     {"max_run", book.spec.thresholds.max_run},
                     {"max_stem", book.spec.thresholds.max_stem}};
    j["code"] = json{{"n", book.code.length()}, {"k", book.code.dimension()}};
    j["dna_length"] = book.dna_length;
    j["size_exponent"] = book.size_exponent;
    j["augmented"] = book.augmented;
    j["explicit"] = book.explicit_book();
    if (book.explicit_book()) {
        j["sequence_count"] = book.sequences->size();
        j["duplicate_sequences"] = book.duplicate_sequences;
    }
    j["rate"] = book.rate;
    j["seed"] = book.spec.seed;

    json dist = json::object();
    for (const auto& [metric, cert] : book.distances)
        dist[to_string(metric)] = cert_json(cert);
    j["distances"] = dist;

    if (const auto check = flip_interval_check(book)) {
        json f;
        f["claimed_lower"] = check->claimed.lower;
        f["claimed_upper"] = check->claimed.upper;
        f["measured_lower"] = check->measured_lower;
        f["measured_upper"] = check->measured_upper;
        f["measured_exact"] = check->measured_exact;
        if (check->holds)
            f["holds"] = *check->holds;
        else
            f["holds"] = nullptr;
        j["flip_distance_interval"] = f;
    }
    if (constraints)
        j["constraints"] = constraints_json(*constraints);
    if (options.timing)
        j["elapsed"] = options.elapsed_seconds;
    return dump(j);
}

std::string constraint_report_json(const ConstraintReport& report, std::size_t record_count,
                                   const ReportOptions& options) {
    json j;
    j["tool_version"] = kToolVersion;
    j["records"] = record_count;
    j["constraints"] = constraints_json(report);
    j["hard_failure"] = report.any_hard_failure();
    if (options.timing)
        j["elapsed"] = options.elapsed_seconds;
    return dump(j);
}

namespace {

json fold_json(const DnaSeq& x, const FoldReport& report) {
    json j;
    j["sequence"] = x.str();
    j["length"] = x.size();
    j["min_free_energy"] = report.min_free_energy;
    j["structure"] = dot_bracket(x.size(), report.structure);
    j["pairs"] = positions_json(report.structure);
    j["max_stem_length"] = report.max_stem_length;
    j["stem_witness"] = positions_json(report.stem_witness);
    return j;
}

} // namespace

std::string fold_report_json(const DnaSeq& x, const FoldReport& report) {
    json j = fold_json(x, report);
    j["tool_version"] = kToolVersion;
    return dump(j);
}

std::string fold_records_json(const std::vector<FastaRecord>& records) {
    json list = json::array();
    for (const auto& r : records) {
        json e = fold_json(r.sequence, fold(r.sequence));
        e["header"] = r.header;
        list.push_back(e);
    }
    return dump(json{{"tool_version", kToolVersion}, {"records", list}});
}

std::string cert_report_json(const CertReport& report, const std::vector<DnaSeq>& alphabet,
                             const ReportOptions& options) {
    json j;
    j["tool_version"] = kToolVersion;
    j["alphabet_id"] = report.alphabet_id;
    j["window"] = report.window;
    j["l_max"] = report.l_max;
    j["max_stem_found"] = report.max_stem_found;
    j["within_limit"] = report.within_limit();
    std::string word;
    json blocks = json::array();
    for (const std::size_t b : report.witness_word) {
        blocks.push_back(b);
        if (b < alphabet.size())
            word += alphabet[b].str();
    }
    j["witness_word"] = blocks;
    j["witness_sequence"] = word;
    j["witness_stem"] = positions_json(report.witness_stem.witness);
    if (report.witness_index)
        j["witness_index"] = *report.witness_index;
    else
        j["witness_index"] = nullptr;
    j["enumerated_count"] = report.enumerated_count;
    j["total_count"] = report.total_count;
    j["next_index"] = report.next_index;
    j["complete"] = report.complete;
    if (!report.complete)
        j["resume_token"] = report.resume_token();
    if (options.timing)
        j["elapsed"] = options.elapsed_seconds;
    return dump(j);
}

std::string rates_csv(const std::vector<RateEntry>& rows) {
    auto field = [](const std::string& s) {
        if (s.find_first_of(",\"") == std::string::npos)
            return s;
        std::string q = "\"";
        for (const char c : s) {
            if (c == '"')
                q += '"';
            q += c;
        }
        return q + "\"";
    };
    std::string out = "name,n_dna,size_exponent,rate,P1_stem,P2_run,P3_rc,provenance\n";
    for (const auto& r : rows) {
        char rate[32];
        std::snprintf(rate, sizeof rate, "%.6f", r.rate);
        out += field(r.name) + "," + std::to_string(r.n_dna) + "," + std::to_string(r.size_exponent) + "," + rate +
               "," + field(r.p1_stem) + "," + field(r.p2_run) + "," + field(r.p3_rc) + "," + r.provenance + "\n";
    }
    return out;
}

} // namespace helix
