#include "runidx/rle_bwt.hpp"

#include <algorithm>
#include <stdexcept>

namespace runidx {

std::vector<std::pair<char, uint64_t>> run_length_encode(const std::string& s) {
    std::vector<std::pair<char, uint64_t>> runs;
    for (size_t i = 0; i < s.size();) {
        size_t j = i + 1;
        while (j < s.size() && s[j] == s[i]) ++j;
        runs.emplace_back(s[i], j - i);
        i = j;
    }
    return runs;
}

rle_bwt::rle_bwt(const std::string& bwt) {
    for (auto [c, len] : run_length_encode(bwt)) {
        heads_.push_back(static_cast<uint8_t>(c));
        lengths_.push_back(len);
    }
    n_ = bwt.size();
    finish_build();
}

rle_bwt::rle_bwt(std::vector<uint8_t> heads, std::vector<uint64_t> lengths, uint64_t n)
    : n_(n), heads_(std::move(heads)), lengths_(std::move(lengths)) {
    if (heads_.size() != lengths_.size())
        throw std::invalid_argument("rle_bwt: head/length count mismatch");
    finish_build();
}

void rle_bwt::finish_build() {
    const uint64_t r = heads_.size();
    run_starts_.resize(r);
    marks_ = bit_vector(n_);
    uint64_t pos = 0;
    for (uint64_t j = 0; j < r; ++j) {
        if (lengths_[j] == 0) throw std::invalid_argument("rle_bwt: zero-length run");
        if (j > 0 && heads_[j] == heads_[j - 1])
            throw std::invalid_argument("rle_bwt: adjacent runs share a head");
        int code = symbol_code(static_cast<char>(heads_[j]));
        if (code < 0) throw std::invalid_argument("rle_bwt: head outside the alphabet");
        run_starts_[j] = pos;
        marks_.set(pos);
        run_ids_[code].push_back(j);
        auto& cum = cum_lens_[code];
        cum.push_back((cum.empty() ? 0 : cum.back()) + lengths_[j]);
        pos += lengths_[j];
    }
    if (pos != n_) throw std::invalid_argument("rle_bwt: run lengths do not sum to size");
    marks_.build_rank();
}

uint64_t rle_bwt::rank(char c, uint64_t i) const {
    const int code = symbol_code(c);
    if (code < 0) throw std::invalid_argument("rle_bwt::rank: symbol outside the alphabet");
    if (i == 0 || run_ids_[code].empty()) return 0;
    if (i > n_) i = n_;

    const uint64_t j = run_of(i - 1);
    const auto& ids = run_ids_[code];
    const auto& cum = cum_lens_[code];
    // runs with head c strictly before run j
    uint64_t t = std::lower_bound(ids.begin(), ids.end(), j) - ids.begin();
    uint64_t total = t > 0 ? cum[t - 1] : 0;
    if (t < ids.size() && ids[t] == j) total += i - run_starts_[j];
    return total;
}

uint64_t rle_bwt::select(char c, uint64_t k) const {
    const int code = symbol_code(c);
    if (code < 0) throw std::invalid_argument("rle_bwt::select: symbol outside the alphabet");
    const auto& cum = cum_lens_[code];
    // first run of c whose cumulative length exceeds k
    uint64_t t = std::upper_bound(cum.begin(), cum.end(), k) - cum.begin();
    if (t == cum.size()) throw std::out_of_range("rle_bwt::select: rank exceeds symbol count");
    uint64_t before = t > 0 ? cum[t - 1] : 0;
    return run_starts_[run_ids_[code][t]] + (k - before);
}

uint64_t rle_bwt::total_count(char c) const {
    const int code = symbol_code(c);
    if (code < 0) throw std::invalid_argument("rle_bwt::total_count: symbol outside the alphabet");
    const auto& cum = cum_lens_[code];
    return cum.empty() ? 0 : cum.back();
}

}  // namespace runidx
