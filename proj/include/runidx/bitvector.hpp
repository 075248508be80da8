/*
 * bitvector.hpp
 *
 * Plain bit sequence with constant-time rank support. Bits are stored
 * LSB-first inside 64-bit words; rank uses one cumulative count per 512-bit
 * superblock plus a 16-bit in-superblock offset per word (~3% overhead).
 */

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace runidx {

class bit_vector {
public:
    bit_vector() = default;

    explicit bit_vector(uint64_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static bit_vector from_words(std::vector<uint64_t> words, uint64_t n) {
        if (words.size() != (n + 63) / 64)
            throw std::invalid_argument("bit_vector: word count does not match size");
        bit_vector bv;
        bv.size_ = n;
        bv.words_ = std::move(words);
        // clear any stray bits past the end
        if (n % 64 != 0 && !bv.words_.empty())
            bv.words_.back() &= (uint64_t{1} << (n % 64)) - 1;
        bv.build_rank();
        return bv;
    }

    void set(uint64_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }

    bool operator[](uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    uint64_t size() const { return size_; }

    // Must be called after the last set() and before the first rank1().
    void build_rank() {
        const size_t n_words = words_.size();
        super_.assign(n_words / 8 + 1, 0);
        intra_.assign(n_words, 0);
        uint64_t total = 0;
        for (size_t w = 0; w < n_words; ++w) {
            if (w % 8 == 0) super_[w / 8] = total;
            intra_[w] = static_cast<uint16_t>(total - super_[w / 8]);
            total += std::popcount(words_[w]);
        }
        ones_ = total;
    }

    // Number of 1 bits in [0, i); i may equal size().
    uint64_t rank1(uint64_t i) const {
        if (i >= size_) return ones_;
        const uint64_t w = i >> 6;
        const uint64_t mask = (uint64_t{1} << (i & 63)) - 1;
        return super_[w >> 3] + intra_[w] + std::popcount(words_[w] & mask);
    }

    uint64_t ones() const { return ones_; }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    uint64_t size_ = 0;
    uint64_t ones_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint64_t> super_;   // ones before each 8-word superblock
    std::vector<uint16_t> intra_;   // ones from superblock start to each word
};

}  // namespace runidx
