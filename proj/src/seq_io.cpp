#include "runidx/seq_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <utility>

#include "runidx/alphabet.hpp"

namespace runidx {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string gunzip(const std::string& raw) {
    if (raw.size() < 2) throw parse_error("truncated gzip stream");
    z_stream strm{};
    // 15 window bits + 16 selects the gzip container
    if (inflateInit2(&strm, 15 + 16) != Z_OK) throw parse_error("gzip init failed");
    strm.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(raw.data()));
    strm.avail_in = static_cast<uInt>(raw.size());

    std::string out;
    std::vector<char> buf(1 << 16);
    int ret = Z_OK;
    while (true) {
        strm.next_out = reinterpret_cast<Bytef*>(buf.data());
        strm.avail_out = static_cast<uInt>(buf.size());
        ret = inflate(&strm, Z_NO_FLUSH);
        if (ret != Z_OK && ret != Z_STREAM_END && ret != Z_BUF_ERROR) {
            inflateEnd(&strm);
            throw parse_error("corrupt gzip stream");
        }
        out.append(buf.data(), buf.size() - strm.avail_out);
        if (ret == Z_STREAM_END) {
            if (strm.avail_in == 0) break;
            // concatenated members (bgzip and friends)
            if (inflateReset(&strm) != Z_OK) {
                inflateEnd(&strm);
                throw parse_error("corrupt gzip stream");
            }
            continue;
        }
        if (strm.avail_in == 0 && strm.avail_out != 0) {
            inflateEnd(&strm);
            throw parse_error("truncated gzip stream");
        }
    }
    inflateEnd(&strm);
    return out;
}

std::vector<sequence_record> parse_fasta_text(const std::string& text) {
    std::vector<sequence_record> records;
    sequence_record cur;
    bool in_record = false;

    auto flush = [&]() {
        if (!in_record) return;
        if (cur.bases.empty())
            throw parse_error("empty sequence body for record '" + cur.name + "'");
        records.push_back(std::move(cur));
        cur = sequence_record{};
    };

    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) nl = text.size();
        std::string line = text.substr(pos, nl - pos);
        strip_cr(line);
        pos = nl + 1;
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            in_record = true;
            cur.name = trim(line.substr(1));
        } else {
            if (!in_record) throw parse_error("malformed FASTA: expected '>' header");
            for (char c : line) {
                if (std::isspace(static_cast<unsigned char>(c))) continue;
                cur.bases.push_back(normalize_base(c));
            }
        }
    }
    flush();
    return records;
}

}  // namespace

const catalog_entry* sequence_catalog::find(uint64_t global_offset) const {
    auto it = std::upper_bound(entries.begin(), entries.end(), global_offset,
                               [](uint64_t off, const catalog_entry& e) { return off < e.start; });
    if (it == entries.begin()) return nullptr;
    --it;
    if (global_offset < it->start + it->length) return &*it;
    return nullptr;
}

bool has_gzip_magic(std::istream& in) {
    std::streampos pos = in.tellg();
    int c1 = in.get();
    int c2 = in.get();
    in.clear();
    in.seekg(pos);
    return c1 == 0x1f && c2 == 0x8b;
}

std::vector<sequence_record> read_fasta(std::istream& in, bool gzipped) {
    std::string raw = read_all(in);
    if (gzipped) raw = gunzip(raw);
    return parse_fasta_text(raw);
}

bool fastq_reader::next(sequence_record& out) {
    auto get_line = [this](std::string& s) {
        if (!std::getline(in_, s)) return false;
        ++line_no_;
        strip_cr(s);
        return true;
    };

    std::string header;
    // tolerate blank lines between records
    while (get_line(header))
        if (!header.empty()) break;
    if (header.empty()) return false;
    if (header[0] != '@')
        throw parse_error("malformed FASTQ at line " + std::to_string(line_no_) +
                          ": expected '@' header");

    std::string bases, plus, quality;
    if (!get_line(bases) || !get_line(plus) || !get_line(quality))
        throw parse_error("truncated FASTQ record at line " + std::to_string(line_no_));

    if (plus.empty() || plus[0] != '+')
        throw parse_error("malformed FASTQ at line " + std::to_string(line_no_ - 1) +
                          ": expected '+' line");
    if (bases.empty())
        throw parse_error("empty sequence body for record '" + trim(header.substr(1)) + "'");
    if (quality.size() != bases.size())
        throw parse_error("quality length mismatch for record '" + trim(header.substr(1)) + "'");

    out.name = trim(header.substr(1));
    out.bases = bases;
    normalize_bases(out.bases);
    out.quality = quality;
    return true;
}

std::vector<sequence_record> read_fastq(std::istream& in) {
    std::vector<sequence_record> records;
    fastq_reader reader(in);
    sequence_record rec;
    while (reader.next(rec)) records.push_back(rec);
    return records;
}

std::pair<text_corpus, sequence_catalog> build_corpus(const std::vector<sequence_record>& records) {
    if (records.empty()) throw parse_error("no sequences to index");

    uint64_t total = 1;  // terminator
    for (const auto& r : records) total += r.bases.size() + 1;

    text_corpus corpus;
    corpus.text.reserve(total);
    sequence_catalog catalog;
    catalog.entries.reserve(records.size());

    for (const auto& r : records) {
        if (r.bases.empty()) throw parse_error("empty sequence body for record '" + r.name + "'");
        for (char c : r.bases)
            if (!is_normalized_base(c))
                throw parse_error("unnormalized base in record '" + r.name + "'");
        catalog.entries.push_back({r.name, corpus.text.size(), r.bases.size()});
        corpus.text += r.bases;
        corpus.text.push_back(kSeparator);
    }
    corpus.text.push_back(kTerminator);
    return {std::move(corpus), std::move(catalog)};
}

}  // namespace runidx
