/*
 * rle_bwt.hpp
 *
 * Run-length encoded Burrows-Wheeler transform over the dense 7-symbol
 * alphabet. Stores one head byte and one length per maximal equal-symbol run,
 * a rank-enabled bit vector marking run starts, and per-symbol run
 * directories so that rank, select over runs, and LF all work in
 * O(log r) or better without ever expanding the transform.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "runidx/alphabet.hpp"
#include "runidx/bitvector.hpp"

namespace runidx {

class rle_bwt {
public:
    rle_bwt() = default;

    // Encode a full BWT string.
    explicit rle_bwt(const std::string& bwt);

    // Rebuild from the serialized pieces.
    rle_bwt(std::vector<uint8_t> heads, std::vector<uint64_t> lengths, uint64_t n);

    uint64_t size() const { return n_; }
    uint64_t num_runs() const { return heads_.size(); }

    char head(uint64_t j) const { return static_cast<char>(heads_[j]); }
    uint64_t run_length(uint64_t j) const { return lengths_[j]; }
    uint64_t run_start(uint64_t j) const { return run_starts_[j]; }

    // Index of the run containing position i.
    uint64_t run_of(uint64_t i) const { return marks_.rank1(i + 1) - 1; }

    char at(uint64_t i) const { return head(run_of(i)); }

    // Occurrences of c in bwt[0, i); i may equal size().
    uint64_t rank(char c, uint64_t i) const;

    // Position of the k-th occurrence of c (0-based). k must be < rank(c, n).
    uint64_t select(char c, uint64_t k) const;

    uint64_t total_count(char c) const;

    const std::vector<uint8_t>& heads() const { return heads_; }
    const std::vector<uint64_t>& lengths() const { return lengths_; }
    const bit_vector& marks() const { return marks_; }

private:
    void finish_build();

    uint64_t n_ = 0;
    std::vector<uint8_t> heads_;
    std::vector<uint64_t> lengths_;
    std::vector<uint64_t> run_starts_;
    bit_vector marks_;
    // run_ids_[c][t]: global id of the t-th run headed by symbol c.
    // cum_lens_[c][t]: total length of the first t runs headed by c.
    std::array<std::vector<uint64_t>, kAlphabetSize> run_ids_;
    std::array<std::vector<uint64_t>, kAlphabetSize> cum_lens_;
};

// Run-length encode a BWT string into (head, length) pairs.
std::vector<std::pair<char, uint64_t>> run_length_encode(const std::string& s);

}  // namespace runidx
