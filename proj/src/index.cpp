#include "runidx/index.hpp"

#include <algorithm>
#include <stdexcept>

#include "runidx/sais.hpp"

namespace runidx {

run_index run_index::build(const text_corpus& corpus) {
    const std::string& text = corpus.text;
    const uint64_t n = text.size();
    std::vector<uint64_t> sa = suffix_array(text);

    std::string bwt(n, '\0');
    for (uint64_t i = 0; i < n; ++i) bwt[i] = text[(sa[i] + n - 1) % n];

    run_index idx;
    idx.bwt_ = rle_bwt(bwt);

    uint64_t counts[kAlphabetSize] = {};
    for (char c : text) ++counts[symbol_code(c)];
    uint64_t acc = 0;
    for (int c = 0; c < kAlphabetSize; ++c) {
        idx.c_[c] = acc;
        acc += counts[c];
    }

    const uint64_t r = idx.bwt_.num_runs();
    idx.samples_start_.resize(r);
    idx.samples_end_.resize(r);
    for (uint64_t j = 0; j < r; ++j) {
        uint64_t start = idx.bwt_.run_start(j);
        idx.samples_start_[j] = sa[start];
        idx.samples_end_[j] = sa[start + idx.bwt_.run_length(j) - 1];
    }

    idx.build_phi();
    return idx;
}

run_index run_index::assemble(rle_bwt bwt, std::array<uint64_t, kAlphabetSize> c_array,
                              std::vector<uint64_t> samples_at_run_starts,
                              std::vector<uint64_t> samples_at_run_ends) {
    run_index idx;
    idx.bwt_ = std::move(bwt);
    idx.c_ = c_array;
    idx.samples_start_ = std::move(samples_at_run_starts);
    idx.samples_end_ = std::move(samples_at_run_ends);

    const uint64_t r = idx.bwt_.num_runs();
    const uint64_t n = idx.bwt_.size();
    if (idx.samples_start_.size() != r || idx.samples_end_.size() != r)
        throw std::invalid_argument("sample count does not match run count");
    for (uint64_t j = 0; j < r; ++j)
        if (idx.samples_start_[j] >= n || idx.samples_end_[j] >= n)
            throw std::invalid_argument("sample position out of range");

    uint64_t acc = 0;
    for (int c = 0; c < kAlphabetSize; ++c) {
        if (idx.c_[c] != acc)
            throw std::invalid_argument("suffix count table disagrees with run content");
        acc += idx.bwt_.total_count(code_symbol(c));
    }
    if (acc != n) throw std::invalid_argument("suffix count table disagrees with run content");

    idx.build_phi();
    return idx;
}

void run_index::build_phi() {
    const uint64_t r = bwt_.num_runs();
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    pairs.reserve(r > 0 ? r - 1 : 0);
    for (uint64_t j = 1; j < r; ++j)
        pairs.emplace_back(samples_start_[j], samples_end_[j - 1]);
    std::sort(pairs.begin(), pairs.end());
    for (uint64_t k = 1; k < pairs.size(); ++k)
        if (pairs[k].first == pairs[k - 1].first)
            throw std::invalid_argument("duplicate run boundary sample");

    phi_keys_.resize(pairs.size());
    phi_vals_.resize(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
        phi_keys_[k] = pairs[k].first;
        phi_vals_[k] = pairs[k].second;
    }
}

uint64_t run_index::lf(uint64_t i) const {
    char c = bwt_.at(i);
    return c_[symbol_code(c)] + bwt_.rank(c, i);
}

sa_range run_index::full_range() const {
    sa_range range;
    range.lo = 0;
    range.hi = size();
    range.toehold = samples_end_.back();
    return range;
}

sa_range run_index::backward_step(const sa_range& range, char c) const {
    sa_range out;
    if (range.empty()) return out;

    const uint64_t n = size();
    const int code = symbol_code(c);
    if (code < 0) return out;

    out.lo = c_[code] + bwt_.rank(c, range.lo);
    out.hi = c_[code] + bwt_.rank(c, range.hi);
    if (out.empty()) return sa_range{};

    if (bwt_.at(range.hi - 1) == c) {
        out.toehold = (range.toehold + n - 1) % n;
    } else {
        // last occurrence of c below hi ends a c-run; its sample is the
        // suffix position at that row
        uint64_t p = bwt_.select(c, bwt_.rank(c, range.hi) - 1);
        uint64_t sample = samples_end_[bwt_.run_of(p)];
        out.toehold = (sample + n - 1) % n;
    }
    return out;
}

uint64_t run_index::phi(uint64_t j) const {
    if (j + 1 >= size())
        throw std::out_of_range("phi: undefined for the lexicographically smallest suffix");
    // predecessor key: largest run-start sample <= j
    auto it = std::upper_bound(phi_keys_.begin(), phi_keys_.end(), j);
    if (it == phi_keys_.begin()) throw std::out_of_range("phi: no predecessor sample");
    uint64_t k = (it - phi_keys_.begin()) - 1;
    return phi_vals_[k] + (j - phi_keys_[k]);
}

std::vector<uint64_t> run_index::locate(const sa_range& range) const {
    return locate(range, range.count());
}

std::vector<uint64_t> run_index::locate(const sa_range& range, uint64_t limit) const {
    std::vector<uint64_t> out;
    if (range.empty() || limit == 0) return out;
    const uint64_t want = std::min(limit, range.count());
    out.reserve(want);
    uint64_t j = range.toehold;
    for (uint64_t k = 0; k < want; ++k) {
        out.push_back(j);
        if (k + 1 < want) j = phi(j);
    }
    return out;
}

}  // namespace runidx
