#include "runidx/sais.hpp"

#include <algorithm>
#include <stdexcept>

#include "runidx/alphabet.hpp"

namespace runidx {

namespace {

constexpr uint64_t kEmpty = ~uint64_t{0};

// One induced-sorting round: seed the LMS suffixes at their bucket tails,
// induce L suffixes left to right, then S suffixes right to left. With `lms`
// in sorted order this yields the full suffix array.
void induced_sort(const std::vector<uint64_t>& s, std::vector<uint64_t>& sa,
                  const std::vector<uint8_t>& is_s, const std::vector<uint64_t>& bucket_sizes,
                  const std::vector<uint64_t>& lms, uint64_t sigma) {
    const uint64_t n = s.size();
    std::fill(sa.begin(), sa.end(), kEmpty);
    std::vector<uint64_t> ptr(sigma);

    uint64_t sum = 0;
    for (uint64_t c = 0; c < sigma; ++c) {
        sum += bucket_sizes[c];
        ptr[c] = sum;
    }
    for (auto it = lms.rbegin(); it != lms.rend(); ++it) sa[--ptr[s[*it]]] = *it;

    sum = 0;
    for (uint64_t c = 0; c < sigma; ++c) {
        ptr[c] = sum;
        sum += bucket_sizes[c];
    }
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t v = sa[i];
        if (v == kEmpty || v == 0) continue;
        if (!is_s[v - 1]) sa[ptr[s[v - 1]]++] = v - 1;
    }

    sum = 0;
    for (uint64_t c = 0; c < sigma; ++c) {
        sum += bucket_sizes[c];
        ptr[c] = sum;
    }
    for (uint64_t i = n; i-- > 0;) {
        uint64_t v = sa[i];
        if (v == kEmpty || v == 0) continue;
        if (is_s[v - 1]) sa[--ptr[s[v - 1]]] = v - 1;
    }
}

// s must end with a unique smallest symbol; the recursion preserves this.
std::vector<uint64_t> sais_rec(const std::vector<uint64_t>& s, uint64_t sigma) {
    const uint64_t n = s.size();
    std::vector<uint64_t> sa(n, kEmpty);
    if (n == 1) {
        sa[0] = 0;
        return sa;
    }

    std::vector<uint8_t> is_s(n);
    is_s[n - 1] = 1;
    for (uint64_t i = n - 1; i-- > 0;)
        is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);

    std::vector<uint64_t> bucket_sizes(sigma, 0);
    for (uint64_t c : s) ++bucket_sizes[c];

    std::vector<uint64_t> lms;  // text order; always includes n-1
    for (uint64_t i = 1; i < n; ++i)
        if (is_s[i] && !is_s[i - 1]) lms.push_back(i);

    induced_sort(s, sa, is_s, bucket_sizes, lms, sigma);

    // LMS substring of lms[k] spans [lms[k], lms[k+1]] inclusive; the last
    // one (the sentinel) is just itself.
    const uint64_t m = lms.size();
    std::vector<uint64_t> end_of(n, 0);
    for (uint64_t k = 0; k + 1 < m; ++k) end_of[lms[k]] = lms[k + 1];
    end_of[lms[m - 1]] = lms[m - 1];

    std::vector<uint64_t> sorted_lms;
    sorted_lms.reserve(m);
    for (uint64_t i = 0; i < n; ++i) {
        uint64_t v = sa[i];
        if (v > 0 && is_s[v] && !is_s[v - 1]) sorted_lms.push_back(v);
    }

    std::vector<uint64_t> name_of(n, 0);
    uint64_t names = 0;
    uint64_t prev = kEmpty;
    for (uint64_t pos : sorted_lms) {
        if (prev != kEmpty) {
            uint64_t len = end_of[pos] - pos;
            bool same = len == end_of[prev] - prev &&
                        std::equal(s.begin() + pos, s.begin() + pos + len + 1, s.begin() + prev);
            if (!same) ++names;
        }
        name_of[pos] = names;
        prev = pos;
    }
    const uint64_t distinct = names + 1;

    std::vector<uint64_t> reduced_sa(m);
    if (distinct == m) {
        for (uint64_t k = 0; k < m; ++k) reduced_sa[name_of[lms[k]]] = k;
    } else {
        std::vector<uint64_t> reduced(m);
        for (uint64_t k = 0; k < m; ++k) reduced[k] = name_of[lms[k]];
        reduced_sa = sais_rec(reduced, distinct);
    }

    std::vector<uint64_t> lms_sorted(m);
    for (uint64_t k = 0; k < m; ++k) lms_sorted[k] = lms[reduced_sa[k]];

    induced_sort(s, sa, is_s, bucket_sizes, lms_sorted, sigma);
    return sa;
}

}  // namespace

std::vector<uint64_t> suffix_array(const std::string& text) {
    const uint64_t n = text.size();
    if (n == 0) throw std::invalid_argument("suffix_array: empty text");

    std::vector<uint64_t> s(n);
    for (uint64_t i = 0; i < n; ++i) {
        int code = symbol_code(text[i]);
        if (code < 0)
            throw std::invalid_argument("suffix_array: byte outside the indexed alphabet");
        s[i] = static_cast<uint64_t>(code);
    }
    for (uint64_t i = 0; i + 1 < n; ++i)
        if (s[i] <= s[n - 1])
            throw std::invalid_argument(
                "suffix_array: text must end with a unique smallest terminator");

    return sais_rec(s, kAlphabetSize);
}

}  // namespace runidx
