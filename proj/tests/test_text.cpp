#include "support/fixture.hpp"
#include "support/oracles.hpp"
#include "support/random_corpus.hpp"

#include "rtv/error.hpp"
#include "rtv/text.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rtv;
using Tokens = std::vector<std::string>;

TEST_SUITE("text") {

TEST_CASE("tokenize examples") {
    CHECK(tokenize("deep learning speech", StopwordSet{}) == Tokens{"deep", "learning", "speech"});
    CHECK(tokenize("model of learning", StopwordSet{"of"}) == Tokens{"model", "learning"});
    CHECK(tokenize("A 2021!", StopwordSet{}).empty());
    CHECK(tokenize("A 2021!", StopwordSet::english()).empty());
    CHECK(tokenize("", StopwordSet{}).empty());
}

TEST_CASE("tokenize splits on punctuation and keeps mixed alphanumerics") {
    CHECK(tokenize("End-to-end ASR, w/ GPT-4 (2023); x86_64", StopwordSet{}) ==
          Tokens{"end", "to", "end", "asr", "gpt", "x86"});
    CHECK(tokenize("BERT's state-of-the-art", StopwordSet{"the", "of"}) == Tokens{"bert", "state", "art"});
}

TEST_CASE("tokenize handles UTF-8 letters and punctuation") {
    // "Ünïcode—Straße «naïve» café"
    CHECK(tokenize("\xC3\x9Cn\xC3\xAF" "code\xE2\x80\x94Stra\xC3\x9F" "e \xC2\xAB" "na\xC3\xAF" "ve\xC2\xBB caf\xC3\xA9",
                   StopwordSet{}) ==
          Tokens{"\xC3\xBCn\xC3\xAF" "code", "stra\xC3\x9F" "e", "na\xC3\xAF" "ve", "caf\xC3\xA9"});
    // Greek capital letters fold; a single non-ASCII letter is still too short.
    CHECK(tokenize("\xCE\x91\xCE\x92 \xC3\xA9", StopwordSet{}) == Tokens{"\xCE\xB1\xCE\xB2"});
}

TEST_CASE("stopword files") {
    auto s = StopwordSet::parse("# comment\nThe\n  of \n\nAND\r\n", "mem");
    CHECK(s.size() == 3);
    CHECK(s.contains("the"));
    CHECK(s.contains("of"));
    CHECK(s.contains("and"));
    CHECK_FALSE(s.contains("The"));
    CHECK(s.source_path() == "mem");
}

TEST_CASE("built-in English list matches the shipped file") {
    auto builtin = StopwordSet::english();
    auto file = StopwordSet::load(std::string(RTV_TEST_DATA_DIR) + "/../data/stopwords_en.txt");
    CHECK(builtin.size() == file.size());
    CHECK(builtin.size() >= 150);
    for (const char* w : {"the", "of", "and", "a", "in", "with"}) CHECK(builtin.contains(w));
    for (const char* w : {"model", "speech", "data", "deep", "learning"}) CHECK_FALSE(builtin.contains(w));
}

TEST_CASE("tokenize is idempotent on its joined output") {
    test::RandomCorpus gen(3);
    auto stop = StopwordSet::english();
    for (int i = 0; i < 200; ++i) {
        for (const auto& r : gen.records()) {
            auto once = tokenize(r.abstract, stop);
            std::string joined;
            for (const auto& t : once) joined += t + " ";
            CHECK(tokenize(joined, stop) == once);
        }
    }
}

TEST_CASE("bucket_word_counts on fixture A") {
    auto c = test::fixture_a();
    auto counts = bucket_word_counts(c.records(), Granularity::year, StopwordSet{"of"});
    BucketWordCounts expected{
        {"2019", {{"deep", 1}, {"learning", 1}, {"speech", 2}, {"recognition", 1}, {"model", 1}}},
        {"2020", {{"clinical", 1}, {"speech", 1}, {"data", 1}, {"model", 1}, {"learning", 1}}},
        {"2021", {{"deep", 1}, {"model", 1}}},
    };
    CHECK(counts == expected);
}

TEST_CASE("bucket_word_counts edge cases") {
    CHECK(bucket_word_counts({}, Granularity::year, StopwordSet{}).empty());

    PaperRecord p;
    p.abstract = "deep deep";
    p.pub_date = test::ymd(2020, 4, 2);
    std::vector<PaperRecord> one{p};
    auto counts = bucket_word_counts(one, Granularity::month, StopwordSet{});
    CHECK(counts == BucketWordCounts{{"2020-04", {{"deep", 2}}}});

    // Gaps between populated buckets are emitted empty.
    auto q = p;
    q.pub_date = test::ymd(2020, 7, 9);
    q.abstract = "";
    std::vector<PaperRecord> two{p, q};
    auto spanned = bucket_word_counts(two, Granularity::month, StopwordSet{});
    REQUIRE(spanned.size() == 4);
    CHECK(spanned.at("2020-05").empty());
    CHECK(spanned.at("2020-07").empty());
}

TEST_CASE("race frames on fixture A") {
    auto c = test::fixture_a();
    auto counts = bucket_word_counts(c.records(), Granularity::year, StopwordSet{"of"});

    auto race = race_frames(counts, 3, RaceMode::cumulative);
    REQUIRE(race.frames.size() == 3);
    CHECK(race.frames.back().bucket == "2021");
    CHECK(race.frames.back().entries == std::vector<RaceEntry>{{"model", 3}, {"speech", 3}, {"deep", 2}});
    // 2019 alone: speech 2, then ties at 1 in word order
    CHECK(race.frames.front().entries == std::vector<RaceEntry>{{"speech", 2}, {"deep", 1}, {"learning", 1}});

    auto per = race_frames(counts, 1, RaceMode::per_bucket);
    REQUIRE(per.frames.size() == 3);
    CHECK(per.frames[0].entries == std::vector<RaceEntry>{{"speech", 2}});
    CHECK(per.frames[1].entries == std::vector<RaceEntry>{{"clinical", 1}});
    CHECK(per.frames[2].entries == std::vector<RaceEntry>{{"deep", 1}});
}

TEST_CASE("race frame edge cases") {
    CHECK(race_frames({}, 5, RaceMode::cumulative).frames.empty());
    BucketWordCounts gap{{"2019", {{"a1", 2}}}, {"2020", {}}};
    auto per = race_frames(gap, 1, RaceMode::per_bucket);
    REQUIRE(per.frames.size() == 2);
    CHECK(per.frames[1].entries.empty());
    auto cum = race_frames(gap, 1, RaceMode::cumulative);
    CHECK(cum.frames[1].entries == std::vector<RaceEntry>{{"a1", 2}});

    try {
        race_frames(gap, 0, RaceMode::cumulative);
        FAIL("expected InvalidK");
    } catch (const Error& e) {
        CHECK(e.code() == "InvalidK");
    }
}

TEST_CASE("race properties on random corpora") {
    test::RandomCorpus gen(99);
    const std::set<std::string> stop_words{"of", "the", "and", "in"};
    StopwordSet stop{"of", "the", "and", "in"};
    for (int iter = 0; iter < 300; ++iter) {
        auto records = gen.records();
        auto counts = bucket_word_counts(records, Granularity::year, stop);
        const int k = gen.uniform(1, 6);

        auto cum = race_frames(counts, k, RaceMode::cumulative);
        std::map<std::string, std::int64_t> last;
        for (const auto& f : cum.frames) {
            CHECK(f.entries.size() <= static_cast<std::size_t>(k));
            auto resorted = f.entries;
            std::sort(resorted.begin(), resorted.end(), [](const auto& a, const auto& b) {
                return std::make_pair(-a.count, a.word) < std::make_pair(-b.count, b.word);
            });
            CHECK(resorted == f.entries);
            for (const auto& e : f.entries) {
                if (last.count(e.word)) CHECK(last[e.word] <= e.count);
                last[e.word] = e.count;
            }
        }

        // Conservation: per-bucket totals equal the filtered token counts.
        for (const auto& [bucket, words] : counts) {
            std::int64_t sum = 0;
            for (const auto& [w, c] : words) sum += c;
            std::int64_t tokens = 0;
            for (const auto& r : records) {
                if (bucket_of(r.pub_date, Granularity::year) == bucket) {
                    tokens += static_cast<std::int64_t>(oracle::ascii_tokens(r.abstract, stop_words).size());
                }
            }
            CHECK(sum == tokens);
        }
    }
}

}
