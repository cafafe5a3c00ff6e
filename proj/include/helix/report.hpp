// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helix/codebook.hpp"
#include "helix/fasta.hpp"
#include "helix/folding.hpp"

namespace helix {

struct ReportOptions {
    /// Wall-clock fields break byte-identical output, so they are opt-in.
    bool timing = false;
    double elapsed_seconds = 0.0;
};

/// Flip-map interval check derived from the induced-distance certificate and
/// the measured post-flip distance, when both are present.
struct FlipIntervalCheck {
    ClaimedInterval claimed;
    std::size_t measured_lower = 0;
    std::size_t measured_upper = 0;
    bool measured_exact = false;
    /// Exact measurement inside the interval; nullopt when not decidable.
    std::optional<bool> holds;
};
std::optional<FlipIntervalCheck> flip_interval_check(const DnaCodebook& book);

/// JSON object with sorted keys, two-space indent, trailing newline.
std::string codebook_report_json(const DnaCodebook& book, const std::optional<ConstraintReport>& constraints,
                                 const ReportOptions& options = {});
std::string constraint_report_json(const ConstraintReport& report, std::size_t record_count,
                                   const ReportOptions& options = {});
std::string fold_report_json(const DnaSeq& x, const FoldReport& report);
/// Folds every record; one entry per record, in input order.
std::string fold_records_json(const std::vector<FastaRecord>& records);
std::string cert_report_json(const CertReport& report, const std::vector<DnaSeq>& alphabet,
                             const ReportOptions& options = {});

/// name,n_dna,size_exponent,rate,P1_stem,P2_run,P3_rc,provenance
std::string rates_csv(const std::vector<RateEntry>& rows);

} // namespace helix
