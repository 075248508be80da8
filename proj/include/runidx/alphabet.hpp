/*
 * alphabet.hpp
 *
 * Indexed alphabet and base normalization.
 *
 * Symbol order is terminator < separator < A < C < G < N < T. The terminator
 * ends the corpus and occurs exactly once; a separator follows every sequence,
 * so a pattern of bases can never straddle two sequences.
 */

#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace runidx {

inline constexpr char kTerminator = '\x01';
inline constexpr char kSeparator = '\x02';
inline constexpr int kAlphabetSize = 7;

namespace detail {

constexpr std::array<int8_t, 256> make_code_table() {
    std::array<int8_t, 256> t{};
    for (auto& x : t) x = -1;
    t[static_cast<unsigned char>(kTerminator)] = 0;
    t[static_cast<unsigned char>(kSeparator)] = 1;
    t['A'] = 2;
    t['C'] = 3;
    t['G'] = 4;
    t['N'] = 5;
    t['T'] = 6;
    return t;
}

inline constexpr std::array<int8_t, 256> kCodeTable = make_code_table();
inline constexpr std::array<char, kAlphabetSize> kSymbolTable = {kTerminator, kSeparator,
                                                                 'A', 'C', 'G', 'N', 'T'};

}  // namespace detail

// Dense code of an indexed byte, or -1 if the byte is outside the alphabet.
inline constexpr int symbol_code(char b) {
    return detail::kCodeTable[static_cast<unsigned char>(b)];
}

inline constexpr char code_symbol(int code) {
    return detail::kSymbolTable[static_cast<size_t>(code)];
}

// Uppercase; every byte outside {A,C,G,T} becomes 'N'.
inline constexpr char normalize_base(char b) {
    char u = (b >= 'a' && b <= 'z') ? static_cast<char>(b - 'a' + 'A') : b;
    switch (u) {
        case 'A':
        case 'C':
        case 'G':
        case 'T':
            return u;
        default:
            return 'N';
    }
}

inline void normalize_bases(std::string& bases) {
    for (auto& b : bases) b = normalize_base(b);
}

inline constexpr bool is_normalized_base(char b) {
    return symbol_code(b) >= 2;
}

}  // namespace runidx
