/*
 * search.hpp
 *
 * Read-level queries. A read is matched by backward search from its last
 * base; the result describes the longest suffix of the read that occurs in
 * the indexed text, together with the row interval of that suffix.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "runidx/index.hpp"

namespace runidx {

struct match_result {
    uint64_t matched_len = 0;   // longest read suffix found in the text
    uint64_t read_len = 0;
    uint64_t occurrences = 0;   // interval size for that suffix
    sa_range range;             // rows of the matched suffix (empty if none)

    bool full() const { return matched_len == read_len; }
};

// Backward search, keeping the last nonempty interval. Bases are normalized
// (case folded, non-ACGT mapped to N) before matching. Throws
// std::invalid_argument on an empty read.
match_result match_longest_suffix(const run_index& idx, const std::string& read);

struct locate_result {
    match_result match;
    std::vector<uint64_t> hits;  // global corpus offsets, phi-walk order
};

// Count, then enumerate positions. Hits are produced only when the whole
// read matched; if max_range is set and the occurrence count exceeds it, the
// hit list stays empty; otherwise at most max_hits positions are walked.
// Zero means unlimited for both knobs.
locate_result locate_read(const run_index& idx, const std::string& read, uint64_t max_hits,
                          uint64_t max_range);

}  // namespace runidx
