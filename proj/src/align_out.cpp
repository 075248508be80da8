#include "runidx/align_out.hpp"

#include <ostream>
#include <stdexcept>

namespace runidx {

resolved_hit resolve(const sequence_catalog& cat, uint64_t global_offset, uint64_t pattern_len) {
    const catalog_entry* e = cat.find(global_offset);
    if (e == nullptr)
        throw std::runtime_error("internal corruption: hit offset outside every sequence");
    if (global_offset + pattern_len > e->start + e->length)
        throw std::runtime_error("internal corruption: hit crosses a sequence boundary");
    return {e->name, global_offset - e->start + 1};
}

void write_count_line(std::ostream& out, const std::string& name, const match_result& m) {
    out << name << '\t' << m.matched_len << '/' << m.read_len << '\t' << m.occurrences << '\n';
}

void write_sam_header(std::ostream& out, const sequence_catalog& cat,
                      const std::string& command_line) {
    out << "@HD\tVN:1.6\tSO:unknown\n";
    for (const auto& e : cat.entries)
        out << "@SQ\tSN:" << e.name << "\tLN:" << e.length << '\n';
    out << "@PG\tID:ri-align\tPN:ri-align";
    if (!command_line.empty()) out << "\tCL:" << command_line;
    out << '\n';
}

namespace {

void write_record(std::ostream& out, const sequence_record& read, int flag,
                  const std::string& rname, uint64_t pos, int mapq, const std::string& cigar,
                  uint64_t nh) {
    out << read.name << '\t' << flag << '\t' << rname << '\t' << pos << '\t' << mapq << '\t'
        << cigar << '\t' << '*' << '\t' << 0 << '\t' << 0 << '\t' << read.bases << '\t'
        << (read.quality.empty() ? "*" : read.quality) << "\tNH:i:" << nh << '\n';
}

}  // namespace

void write_sam_records(std::ostream& out, const sequence_record& read, const match_result& m,
                       const std::vector<resolved_hit>& hits) {
    if (hits.empty()) {
        // full-length matches only lose their hits to max_range; keep the
        // true occurrence count visible in that case
        uint64_t nh = m.full() ? m.occurrences : 0;
        write_record(out, read, 4, "*", 0, 0, "*", nh);
        return;
    }
    const std::string cigar = std::to_string(read.bases.size()) + "M";
    bool first = true;
    for (const auto& h : hits) {
        write_record(out, read, first ? 0 : 256, h.reference_name, h.position, 255, cigar,
                     m.occurrences);
        first = false;
    }
}

}  // namespace runidx
