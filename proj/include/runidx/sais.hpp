/*
 * sais.hpp
 *
 * Linear-time suffix array construction by induced sorting. The input text
 * must end with a terminator byte that is strictly smaller than every other
 * symbol and occurs exactly once.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace runidx {

// Suffix array of `text` (terminator included, so sa[0] is the suffix that
// consists of the terminator alone). Throws std::invalid_argument if the
// terminator invariant does not hold.
std::vector<uint64_t> suffix_array(const std::string& text);

}  // namespace runidx
