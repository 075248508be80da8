#include "runidx/serialize.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace runidx {

namespace {

constexpr uint64_t kMaxNameLength = uint64_t{1} << 20;

void put_u64(std::ostream& out, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(v >> (8 * i));
    out.write(b, 8);
}

uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    in.read(reinterpret_cast<char*>(b), 8);
    if (in.gcount() != 8) throw std::runtime_error("corrupt index: truncated file");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= uint64_t(b[i]) << (8 * i);
    return v;
}

void get_bytes(std::istream& in, char* dst, std::streamsize len) {
    in.read(dst, len);
    if (in.gcount() != len) throw std::runtime_error("corrupt index: truncated file");
}

void check_magic(std::istream& in, const char (&magic)[8]) {
    char got[8];
    get_bytes(in, got, 8);
    if (std::memcmp(got, magic, 8) != 0)
        throw std::runtime_error("corrupt index: bad magic");
}

void check_version(std::istream& in) {
    uint64_t v = get_u64(in);
    if (v != kFormatVersion)
        throw std::runtime_error("unsupported index format version " + std::to_string(v));
}

void check_no_trailing(std::istream& in) {
    if (in.peek() != std::char_traits<char>::eof())
        throw std::runtime_error("corrupt index: trailing data");
}

}  // namespace

void write_index(std::ostream& out, const run_index& idx) {
    const rle_bwt& bwt = idx.bwt();
    const uint64_t n = bwt.size();
    const uint64_t r = bwt.num_runs();

    out.write(kIndexMagic, 8);
    put_u64(out, kFormatVersion);
    put_u64(out, n);
    put_u64(out, r);
    put_u64(out, kAlphabetSize);
    out.write(reinterpret_cast<const char*>(bwt.heads().data()), r);
    for (uint64_t v : bwt.lengths()) put_u64(out, v);
    for (uint64_t w : bwt.marks().words()) put_u64(out, w);
    for (uint64_t v : idx.c_array()) put_u64(out, v);
    for (uint64_t v : idx.samples_at_run_starts()) put_u64(out, v);
    for (uint64_t v : idx.samples_at_run_ends()) put_u64(out, v);
}

run_index read_index(std::istream& in) {
    check_magic(in, kIndexMagic);
    check_version(in);
    const uint64_t n = get_u64(in);
    const uint64_t r = get_u64(in);
    if (get_u64(in) != kAlphabetSize)
        throw std::runtime_error("corrupt index: alphabet size mismatch");
    if (r > n) throw std::runtime_error("corrupt index: more runs than symbols");

    std::vector<uint8_t> heads(r);
    get_bytes(in, reinterpret_cast<char*>(heads.data()), r);
    std::vector<uint64_t> lengths(r);
    for (auto& v : lengths) v = get_u64(in);

    const uint64_t n_words = (n + 63) / 64;
    std::vector<uint64_t> mark_words(n_words);
    for (auto& w : mark_words) w = get_u64(in);

    std::array<uint64_t, kAlphabetSize> c_array;
    for (auto& v : c_array) v = get_u64(in);
    std::vector<uint64_t> starts(r), ends(r);
    for (auto& v : starts) v = get_u64(in);
    for (auto& v : ends) v = get_u64(in);
    check_no_trailing(in);

    try {
        rle_bwt bwt(std::move(heads), std::move(lengths), n);
        bit_vector stored = bit_vector::from_words(std::move(mark_words), n);
        if (stored.words() != bwt.marks().words())
            throw std::invalid_argument("run marks disagree with run lengths");
        return run_index::assemble(std::move(bwt), c_array, std::move(starts), std::move(ends));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("corrupt index: ") + e.what());
    }
}

void write_catalog(std::ostream& out, const sequence_catalog& cat) {
    out.write(kCatalogMagic, 8);
    put_u64(out, kFormatVersion);
    put_u64(out, cat.entries.size());
    for (const auto& e : cat.entries) {
        put_u64(out, e.name.size());
        out.write(e.name.data(), e.name.size());
        put_u64(out, e.start);
        put_u64(out, e.length);
    }
}

sequence_catalog read_catalog(std::istream& in) {
    check_magic(in, kCatalogMagic);
    check_version(in);
    const uint64_t count = get_u64(in);

    sequence_catalog cat;
    cat.entries.reserve(count < (uint64_t{1} << 20) ? count : 0);
    uint64_t prev_end = 0;
    for (uint64_t i = 0; i < count; ++i) {
        uint64_t name_len = get_u64(in);
        if (name_len > kMaxNameLength)
            throw std::runtime_error("corrupt index: unreasonable name length");
        catalog_entry e;
        e.name.resize(name_len);
        get_bytes(in, e.name.data(), name_len);
        e.start = get_u64(in);
        e.length = get_u64(in);
        if (i > 0 && e.start < prev_end)
            throw std::runtime_error("corrupt index: catalog entries overlap");
        prev_end = e.start + e.length;
        cat.entries.push_back(std::move(e));
    }
    check_no_trailing(in);
    return cat;
}

void save_index(const std::string& prefix, const run_index& idx, const sequence_catalog& cat) {
    const std::string ri_path = prefix + ".ri";
    const std::string cat_path = prefix + ".1.ri";

    std::ofstream ri(ri_path, std::ios::binary);
    if (!ri) throw std::runtime_error("cannot write index file: " + ri_path);
    write_index(ri, idx);
    if (!ri) throw std::runtime_error("I/O failure writing " + ri_path);
    ri.close();

    std::ofstream cf(cat_path, std::ios::binary);
    if (!cf) throw std::runtime_error("cannot write index file: " + cat_path);
    write_catalog(cf, cat);
    if (!cf) throw std::runtime_error("I/O failure writing " + cat_path);
}

std::pair<run_index, sequence_catalog> load_index(const std::string& prefix) {
    const std::string ri_path = prefix + ".ri";
    const std::string cat_path = prefix + ".1.ri";

    std::ifstream ri(ri_path, std::ios::binary);
    if (!ri) throw std::runtime_error("missing index file: " + ri_path);
    std::ifstream cf(cat_path, std::ios::binary);
    if (!cf) throw std::runtime_error("missing index file: " + cat_path);

    run_index idx = read_index(ri);
    sequence_catalog cat = read_catalog(cf);
    return {std::move(idx), std::move(cat)};
}

}  // namespace runidx
