// SPDX-License-Identifier: Apache-2.0

#include "helix/fasta.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helix/error.hpp"

namespace helix {

std::string codeword_header(std::size_t index, const Word& codeword, bool f_applied, bool complement_member) {
    std::string h = "cw_" + std::to_string(index) + " z11=" + codeword.str();
    if (f_applied)
        h += " f=applied";
    if (complement_member)
        h += " complement";
    return h;
}

void write_fasta(std::ostream& out, const std::vector<FastaRecord>& records) {
    for (const auto& r : records) {
        out << '>' << r.header << '\n';
        const std::string_view s = r.sequence.view();
        for (std::size_t i = 0; i < s.size(); i += kFastaLineWidth)
            out << s.substr(i, kFastaLineWidth) << '\n';
    }
}

std::string to_fasta(const std::vector<FastaRecord>& records) {
    std::ostringstream out;
    write_fasta(out, records);
    return out.str();
}

std::vector<FastaRecord> read_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    std::string line;
    std::string header;
    std::string bases;
    std::size_t header_line = 0;
    bool open = false;
    std::size_t line_no = 0;

    auto close = [&]() {
        if (!open)
            return;
        if (bases.empty())
            fail(ErrorCode::ParseError, "line " + std::to_string(header_line) + ": record has no sequence");
        records.push_back(FastaRecord{header, DnaSeq(bases)});
        bases.clear();
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line.front() == '>') {
            close();
            header = line.substr(1);
            if (header.empty())
                fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": empty header");
            header_line = line_no;
            open = true;
            continue;
        }
        if (!open)
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": sequence data before first header");
        for (std::size_t c = 0; c < line.size(); ++c) {
            const char ch = line[c];
            switch (ch) {
            case 'A': case 'C': case 'G': case 'T': case 'a': case 'c': case 'g': case 't': break;
            default:
                fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", column " + std::to_string(c + 1) +
                                                ": invalid base '" + std::string(1, ch) + "'");
            }
        }
        bases += line;
    }
    if (in.bad())
        fail(ErrorCode::IoError, "read error after line " + std::to_string(line_no));
    close();
    return records;
}

std::vector<FastaRecord> parse_fasta(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_fasta(in);
}

std::vector<FastaRecord> read_fasta_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::IoError, "cannot open " + path);
    return read_fasta(in);
}

void write_file_atomic(const std::string& path, std::string_view content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(ErrorCode::IoError, "cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out)
            fail(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fail(ErrorCode::IoError, "cannot rename into " + path);
    }
}

} // namespace helix
