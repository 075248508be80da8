/*
 * serialize.hpp
 *
 * On-disk format. An index is stored as two files sharing a prefix:
 *
 *   <prefix>.ri    magic "RUNIDX\0\0", format version, n, r, alphabet size,
 *                  run head bytes, run lengths, run-start bit vector
 *                  (LSB-first words, padded to 8 bytes), C array, and the
 *                  two sample arrays. All integers little-endian uint64.
 *
 *   <prefix>.1.ri  magic "RUNCAT\0\0", format version, entry count, then per
 *                  sequence: name length, name bytes, start, length.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "runidx/index.hpp"
#include "runidx/seq_io.hpp"

namespace runidx {

inline constexpr uint64_t kFormatVersion = 1;
inline constexpr char kIndexMagic[8] = {'R', 'U', 'N', 'I', 'D', 'X', '\0', '\0'};
inline constexpr char kCatalogMagic[8] = {'R', 'U', 'N', 'C', 'A', 'T', '\0', '\0'};

void write_index(std::ostream& out, const run_index& idx);
run_index read_index(std::istream& in);

void write_catalog(std::ostream& out, const sequence_catalog& cat);
sequence_catalog read_catalog(std::istream& in);

// File-level helpers; `prefix` gains the ".ri" / ".1.ri" suffixes.
void save_index(const std::string& prefix, const run_index& idx, const sequence_catalog& cat);
std::pair<run_index, sequence_catalog> load_index(const std::string& prefix);

}  // namespace runidx
