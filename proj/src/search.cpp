#include "runidx/search.hpp"

#include <stdexcept>

#include "runidx/alphabet.hpp"

namespace runidx {

match_result match_longest_suffix(const run_index& idx, const std::string& read) {
    if (read.empty()) throw std::invalid_argument("empty pattern");

    match_result res;
    res.read_len = read.size();

    sa_range range = idx.full_range();
    uint64_t matched = 0;
    for (auto it = read.rbegin(); it != read.rend(); ++it) {
        sa_range next = idx.backward_step(range, normalize_base(*it));
        if (next.empty()) break;
        range = next;
        ++matched;
    }
    if (matched == 0) return res;

    res.matched_len = matched;
    res.occurrences = range.count();
    res.range = range;
    return res;
}

locate_result locate_read(const run_index& idx, const std::string& read, uint64_t max_hits,
                          uint64_t max_range) {
    locate_result res;
    res.match = match_longest_suffix(idx, read);
    if (!res.match.full()) return res;
    if (max_range != 0 && res.match.occurrences > max_range) return res;
    res.hits = max_hits == 0 ? idx.locate(res.match.range)
                             : idx.locate(res.match.range, max_hits);
    return res;
}

}  // namespace runidx
