#include <doctest.h>

#include <sstream>

#include "runidx/align_out.hpp"
#include "test_helpers.hpp"

using namespace runidx;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t nl = s.find('\n', pos);
        if (nl == std::string::npos) nl = s.size();
        lines.push_back(s.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
        size_t tab = line.find('\t', pos);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

match_result make_result(uint64_t matched, uint64_t len, uint64_t occ) {
    match_result m;
    m.matched_len = matched;
    m.read_len = len;
    m.occurrences = occ;
    return m;
}

}  // namespace

TEST_CASE("resolve maps global offsets into catalog entries") {
    sequence_catalog cat;
    cat.entries.push_back({"a", 0, 4});
    cat.entries.push_back({"b", 5, 2});

    resolved_hit h = resolve(cat, 6, 1);
    CHECK(h.reference_name == "b");
    CHECK(h.position == 2);

    h = resolve(cat, 0, 4);
    CHECK(h.reference_name == "a");
    CHECK(h.position == 1);

    CHECK_THROWS_AS(resolve(cat, 4, 1), std::runtime_error);  // separator position
    CHECK_THROWS_AS(resolve(cat, 3, 2), std::runtime_error);  // crosses the boundary
    CHECK_THROWS_AS(resolve(cat, 6, 2), std::runtime_error);  // ends past the entry
}

TEST_CASE("resolve agrees with a linear scan on random catalogs") {
    std::mt19937_64 rng(29001);
    for (int it = 0; it < 100; ++it) {
        auto recs = testutil::random_records(rng, 6, 50 + rng() % 200);
        auto [corpus, catalog] = build_corpus(recs);

        std::uniform_int_distribution<uint64_t> off_d(0, corpus.size() - 1);
        uint64_t off = off_d(rng);

        // oracle: scan entries for ownership
        const catalog_entry* owner = nullptr;
        for (const auto& e : catalog.entries)
            if (off >= e.start && off < e.start + e.length) owner = &e;

        if (owner == nullptr) {
            CHECK_THROWS_AS(resolve(catalog, off, 1), std::runtime_error);
        } else {
            uint64_t max_len = owner->start + owner->length - off;
            resolved_hit h = resolve(catalog, off, max_len);
            CHECK(h.reference_name == owner->name);
            CHECK(h.position == off - owner->start + 1);
            CHECK(h.position >= 1);
            CHECK(h.position <= owner->length - max_len + 1);
            CHECK_THROWS_AS(resolve(catalog, off, max_len + 1), std::runtime_error);
        }
    }
}

TEST_CASE("count lines render name, fraction and count") {
    std::ostringstream out;
    write_count_line(out, "simulated.0", make_result(100, 100, 22));
    CHECK(out.str() == "simulated.0\t100/100\t22\n");

    std::ostringstream out2;
    write_count_line(out2, "simulated.0.3edits", make_result(44, 100, 492));
    CHECK(out2.str() == "simulated.0.3edits\t44/100\t492\n");

    std::ostringstream out3;
    write_count_line(out3, "r", make_result(0, 10, 0));
    CHECK(out3.str() == "r\t0/10\t0\n");
}

TEST_CASE("sam header lists @HD, one @SQ per entry, and @PG") {
    sequence_catalog cat;
    cat.entries.push_back({"gb:KY474305|Organism:Dengue virus 2", 0, 10676});
    cat.entries.push_back({"second", 10677, 42});

    std::ostringstream out;
    write_sam_header(out, cat, "ri-align locate dengue reads.fq");
    auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "@HD\tVN:1.6\tSO:unknown");
    CHECK(lines[1] == "@SQ\tSN:gb:KY474305|Organism:Dengue virus 2\tLN:10676");
    CHECK(lines[2] == "@SQ\tSN:second\tLN:42");
    CHECK(lines[3].rfind("@PG\tID:ri-align", 0) == 0);
    CHECK(lines[3].find("CL:ri-align locate dengue reads.fq") != std::string::npos);
}

TEST_CASE("sam header with an empty catalog keeps @HD and @PG only") {
    std::ostringstream out;
    write_sam_header(out, sequence_catalog{}, "");
    auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "@HD\tVN:1.6\tSO:unknown");
    CHECK(lines[1].rfind("@PG", 0) == 0);
}

TEST_CASE("mapped sam record fields") {
    sequence_record read;
    read.name = "simulated.0";
    read.bases = std::string(100, 'A');
    read.quality = std::string(100, 'I');

    std::ostringstream out;
    write_sam_records(out, read, make_result(100, 100, 22),
                      {{"gb:GQ868562|Organism:Dengue virus 2", 2525}});
    auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 1);
    auto f = split_tabs(lines[0]);
    REQUIRE(f.size() == 12);
    CHECK(f[0] == "simulated.0");
    CHECK(f[1] == "0");
    CHECK(f[2] == "gb:GQ868562|Organism:Dengue virus 2");
    CHECK(f[3] == "2525");
    CHECK(f[4] == "255");
    CHECK(f[5] == "100M");
    CHECK(f[6] == "*");
    CHECK(f[7] == "0");
    CHECK(f[8] == "0");
    CHECK(f[9] == read.bases);
    CHECK(f[10] == read.quality);
    CHECK(f[11] == "NH:i:22");
}

TEST_CASE("secondary hits get flag 256 and share the NH count") {
    sequence_record read{"r1", "ACGT", "IIII"};
    std::ostringstream out;
    write_sam_records(out, read, make_result(4, 4, 2), {{"a", 1}, {"a", 5}});
    auto lines = split_lines(out.str());
    REQUIRE(lines.size() == 2);
    auto f0 = split_tabs(lines[0]);
    auto f1 = split_tabs(lines[1]);
    CHECK(f0[1] == "0");
    CHECK(f1[1] == "256");
    CHECK(f0[11] == "NH:i:2");
    CHECK(f1[11] == "NH:i:2");
    CHECK(f0[5] == "4M");
    CHECK(f1[3] == "5");
}

TEST_CASE("unmapped records") {
    sequence_record read{"r1", "ACGT", ""};

    // partial match: no hits were possible
    std::ostringstream out;
    write_sam_records(out, read, make_result(2, 4, 7), {});
    auto f = split_tabs(split_lines(out.str())[0]);
    REQUIRE(f.size() == 12);
    CHECK(f[1] == "4");
    CHECK(f[2] == "*");
    CHECK(f[3] == "0");
    CHECK(f[4] == "0");
    CHECK(f[5] == "*");
    CHECK(f[9] == "ACGT");
    CHECK(f[10] == "*");  // empty quality renders as *
    CHECK(f[11] == "NH:i:0");

    // full-length match suppressed by max_range keeps its true count
    std::ostringstream out2;
    write_sam_records(out2, read, make_result(4, 4, 7), {});
    auto f2 = split_tabs(split_lines(out2.str())[0]);
    CHECK(f2[1] == "4");
    CHECK(f2[11] == "NH:i:7");
}

TEST_CASE("every record line has 11 mandatory fields plus the NH tag") {
    sequence_record read{"q", "ACG", "JJJ"};
    std::ostringstream out;
    write_sam_records(out, read, make_result(3, 3, 3), {{"s", 1}, {"s", 2}, {"s", 3}});
    write_sam_records(out, read, make_result(1, 3, 9), {});
    for (const auto& line : split_lines(out.str())) {
        auto f = split_tabs(line);
        CHECK(f.size() == 12);
        CHECK(f[11].rfind("NH:i:", 0) == 0);
    }
}
