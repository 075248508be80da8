#include <doctest.h>

#include <algorithm>

#include "runidx/search.hpp"
#include "test_helpers.hpp"

using namespace runidx;

namespace {

run_index example_index() {
    return run_index::build(testutil::corpus_of(testutil::with_terminator("ACGTACGT")));
}

}  // namespace

TEST_CASE("longest-suffix count on the worked example") {
    run_index idx = example_index();

    match_result full = match_longest_suffix(idx, "ACGT");
    CHECK(full.matched_len == 4);
    CHECK(full.read_len == 4);
    CHECK(full.occurrences == 2);
    CHECK(full.full());

    match_result partial = match_longest_suffix(idx, "GGG");
    CHECK(partial.matched_len == 1);
    CHECK(partial.read_len == 3);
    CHECK(partial.occurrences == 2);
    CHECK_FALSE(partial.full());

    match_result none = match_longest_suffix(idx, "QQQQ");
    CHECK(none.matched_len == 0);
    CHECK(none.read_len == 4);
    CHECK(none.occurrences == 0);

    CHECK_THROWS_AS(match_longest_suffix(idx, ""), std::invalid_argument);
}

TEST_CASE("patterns are normalized before matching") {
    run_index idx = example_index();
    match_result lower = match_longest_suffix(idx, "acgt");
    CHECK(lower.matched_len == 4);
    CHECK(lower.occurrences == 2);

    // 'X' normalizes to N, absent from this corpus
    match_result with_x = match_longest_suffix(idx, "ACGX");
    CHECK(with_x.matched_len == 0);
}

TEST_CASE("count and locate agree with the naive oracle") {
    std::mt19937_64 rng(23001);
    for (int it = 0; it < 100; ++it) {
        auto recs = testutil::random_records(rng, 8, 1 + rng() % 800);
        auto [corpus, catalog] = build_corpus(recs);
        run_index idx = run_index::build(corpus);

        for (int p = 0; p < 30; ++p) {
            std::string pat = testutil::random_pattern(rng, recs, 1, 30, p % 2 == 1);
            auto [len, occ] = testutil::naive_longest_suffix(corpus.text, pat);

            match_result m = match_longest_suffix(idx, pat);
            REQUIRE(m.matched_len == len);
            REQUIRE(m.occurrences == occ);

            locate_result loc = locate_read(idx, pat, 0, 0);
            if (len == pat.size()) {
                auto expect = testutil::naive_occurrence_positions(corpus.text, pat);
                auto got = loc.hits;
                std::sort(got.begin(), got.end());
                REQUIRE(got == expect);
                for (uint64_t off : loc.hits)
                    REQUIRE(corpus.text.substr(off, pat.size()) == pat);
            } else {
                CHECK(loc.hits.empty());
            }
        }
    }
}

TEST_CASE("locate_read applies max_hits and max_range") {
    run_index idx = example_index();

    locate_result unlimited = locate_read(idx, "ACGT", 0, 0);
    CHECK(unlimited.hits == std::vector<uint64_t>{0, 4});
    CHECK(unlimited.match.occurrences == 2);

    locate_result capped = locate_read(idx, "ACGT", 1, 0);
    CHECK(capped.hits == std::vector<uint64_t>{0});
    CHECK(capped.match.occurrences == 2);  // count unaffected by the cap

    locate_result suppressed = locate_read(idx, "ACGT", 0, 1);
    CHECK(suppressed.hits.empty());
    CHECK(suppressed.match.occurrences == 2);
    CHECK(suppressed.match.full());

    locate_result within = locate_read(idx, "ACGT", 0, 2);
    CHECK(within.hits.size() == 2);

    locate_result partial = locate_read(idx, "GGG", 0, 0);
    CHECK(partial.hits.empty());
    CHECK(partial.match.matched_len == 1);
}

TEST_CASE("max_hits returns exactly min(k, occurrences) within max_range") {
    std::mt19937_64 rng(23002);
    for (int it = 0; it < 20; ++it) {
        auto recs = testutil::random_records(rng, 4, 1 + rng() % 400);
        auto [corpus, catalog] = build_corpus(recs);
        run_index idx = run_index::build(corpus);

        for (int p = 0; p < 10; ++p) {
            std::string pat = testutil::random_pattern(rng, recs, 1, 8, false);
            match_result m = match_longest_suffix(idx, pat);
            if (!m.full()) continue;
            for (uint64_t k : {uint64_t{1}, uint64_t{2}, uint64_t{5}, uint64_t{1000}}) {
                locate_result loc = locate_read(idx, pat, k, 0);
                CHECK(loc.hits.size() == std::min(k, m.occurrences));
            }
        }
    }
}
