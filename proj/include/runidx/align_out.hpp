/*
 * align_out.hpp
 *
 * Output side of the aligner: resolution of global corpus offsets to
 * per-sequence coordinates, the tab-separated count report, and SAM records
 * for locate mode.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "runidx/search.hpp"
#include "runidx/seq_io.hpp"

namespace runidx {

struct resolved_hit {
    std::string reference_name;
    uint64_t position = 0;  // 1-based within the named sequence
};

// Map a global corpus offset to (sequence name, 1-based position). Throws
// std::runtime_error if the offset lands outside every catalog entry or the
// pattern would cross a sequence boundary; neither can happen for hits
// produced by a well-formed index.
resolved_hit resolve(const sequence_catalog& cat, uint64_t global_offset, uint64_t pattern_len);

// "<name>\t<matched>/<len>\t<occurrences>\n"
void write_count_line(std::ostream& out, const std::string& name, const match_result& m);

// "@HD\tVN:1.6\tSO:unknown", one @SQ line per catalog entry, one @PG line.
void write_sam_header(std::ostream& out, const sequence_catalog& cat,
                      const std::string& command_line);

// One record per hit (first flag 0, rest flag 256), or a single flag-4
// unmapped record when `hits` is empty. The NH tag always carries the total
// occurrence count of the matched suffix: m.occurrences for full-length
// matches (even when max_range suppressed the hits), 0 for partial matches.
void write_sam_records(std::ostream& out, const sequence_record& read, const match_result& m,
                       const std::vector<resolved_hit>& hits);

}  // namespace runidx
