/*
 * seq_io.hpp
 *
 * FASTA/FASTQ parsing (FASTA optionally gzipped), base normalization, and
 * assembly of the concatenated corpus plus the offset -> sequence catalog.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace runidx {

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct sequence_record {
    std::string name;     // full header line after '>' or '@', trimmed at both ends
    std::string bases;    // normalized: A, C, G, T, N only
    std::string quality;  // FASTQ only; empty for FASTA records
};

// The string the index is built over: every sequence followed by one
// separator, then a single terminator.
struct text_corpus {
    std::string text;

    uint64_t size() const { return text.size(); }
};

struct catalog_entry {
    std::string name;
    uint64_t start = 0;   // 0-based global offset of the first base
    uint64_t length = 0;  // number of bases
};

// Ordered mapping from global text offsets to sequence names; the second
// index file on disk.
struct sequence_catalog {
    std::vector<catalog_entry> entries;

    // Entry owning a global base offset, or nullptr for separator/terminator
    // positions.
    const catalog_entry* find(uint64_t global_offset) const;
};

// Peeks at the first two bytes without consuming them.
bool has_gzip_magic(std::istream& in);

std::vector<sequence_record> read_fasta(std::istream& in, bool gzipped);
std::vector<sequence_record> read_fastq(std::istream& in);

// Incremental FASTQ reader; the aligner streams reads through this.
class fastq_reader {
public:
    explicit fastq_reader(std::istream& in) : in_(in) {}

    // false at clean end of input; throws parse_error on malformed records.
    bool next(sequence_record& out);

private:
    std::istream& in_;
    uint64_t line_no_ = 0;
};

std::pair<text_corpus, sequence_catalog> build_corpus(const std::vector<sequence_record>& records);

}  // namespace runidx
