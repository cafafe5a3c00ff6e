// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "helix/dna.hpp"
#include "helix/zmod11.hpp"

namespace helix {

struct FastaRecord {
    std::string header; ///< without the leading '>'
    DnaSeq sequence;

    bool operator==(const FastaRecord&) const = default;
};

inline constexpr std::size_t kFastaLineWidth = 60;

/// "cw_<index> z11=<digits>" plus " f=applied" and " complement" as needed.
std::string codeword_header(std::size_t index, const Word& codeword, bool f_applied, bool complement_member = false);

/// Sequences wrapped at kFastaLineWidth columns.
void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records);
std::string to_fasta(const std::vector<FastaRecord>& records);

/// Throws ParseError naming the 1-based line for sequence data before the
/// first header, non-ACGT characters, empty headers or empty records.
std::vector<FastaRecord> read_fasta(std::istream& in);
std::vector<FastaRecord> parse_fasta(std::string_view text);

/// Reads a FASTA file; IoError if it cannot be opened.
std::vector<FastaRecord> read_fasta_file(const std::string& path);

/// Writes `content` to `path` through a temporary file and a rename, so a
/// crash never leaves a half-written file. Throws IoError.
void write_file_atomic(const std::string& path, std::string_view content);

} // namespace helix
