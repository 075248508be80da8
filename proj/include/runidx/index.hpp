/*
 * index.hpp
 *
 * Run-length compressed full-text index. Space is proportional to the number
 * of BWT runs: besides the run-length BWT it keeps one text position sampled
 * at the first and last row of every run, which is enough to report the
 * position of every match via the phi function.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "runidx/alphabet.hpp"
#include "runidx/rle_bwt.hpp"
#include "runidx/seq_io.hpp"

namespace runidx {

// Half-open BWT row interval plus the text position of the suffix at row
// hi - 1 (the toehold that locate starts from). Empty when lo >= hi.
struct sa_range {
    uint64_t lo = 0;
    uint64_t hi = 0;
    uint64_t toehold = 0;

    bool empty() const { return lo >= hi; }
    uint64_t count() const { return empty() ? 0 : hi - lo; }
};

class run_index {
public:
    run_index() = default;

    // Build from a terminated corpus string (see build_corpus).
    static run_index build(const text_corpus& corpus);

    // Reassemble from deserialized parts; validates internal consistency.
    static run_index assemble(rle_bwt bwt,
                              std::array<uint64_t, kAlphabetSize> c_array,
                              std::vector<uint64_t> samples_at_run_starts,
                              std::vector<uint64_t> samples_at_run_ends);

    uint64_t size() const { return bwt_.size(); }
    uint64_t num_runs() const { return bwt_.num_runs(); }

    const rle_bwt& bwt() const { return bwt_; }
    const std::array<uint64_t, kAlphabetSize>& c_array() const { return c_; }
    const std::vector<uint64_t>& samples_at_run_starts() const { return samples_start_; }
    const std::vector<uint64_t>& samples_at_run_ends() const { return samples_end_; }

    // Row of the suffix that follows row i's suffix when read one position
    // earlier in the text: lf(i) = C[bwt[i]] + rank(bwt[i], i).
    uint64_t lf(uint64_t i) const;

    // Interval of all rows, toehold = text position of the last row's suffix.
    sa_range full_range() const;

    // One backward search step: restrict `range` to suffixes preceded by c.
    sa_range backward_step(const sa_range& range, char c) const;

    // Text position of the suffix lexicographically preceding the suffix at
    // position j, i.e. phi(sa[i]) = sa[i-1]. Throws std::out_of_range for the
    // first row's position (j + 1 >= size()).
    uint64_t phi(uint64_t j) const;

    // All match positions for a range, recovered by walking phi upward from
    // the toehold. Order is row hi-1 down to row lo.
    std::vector<uint64_t> locate(const sa_range& range) const;

    // At most `limit` positions, same order as locate().
    std::vector<uint64_t> locate(const sa_range& range, uint64_t limit) const;

private:
    void build_phi();

    rle_bwt bwt_;
    std::array<uint64_t, kAlphabetSize> c_ = {};
    std::vector<uint64_t> samples_start_;  // sa value at the first row of each run
    std::vector<uint64_t> samples_end_;    // sa value at the last row of each run
    // phi predecessor structure: keys are run-start samples (runs 1..r-1),
    // each paired with the run-end sample of the preceding run. Sorted by key.
    std::vector<uint64_t> phi_keys_;
    std::vector<uint64_t> phi_vals_;
};

}  // namespace runidx
