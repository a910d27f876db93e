#include "support/fixture.hpp"

#include "rtv/error.hpp"
#include "rtv/service.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <thread>
#include <atomic>

using namespace rtv;
using nlohmann::json;

namespace {

std::shared_ptr<const Corpus> fixture_ptr() {
    return std::make_shared<const Corpus>(test::fixture_a());
}

std::unique_ptr<AnalyticsService> make_service(bool cache = true, std::size_t capacity = 64) {
    AnalyticsService::Options opts;
    opts.cache_enabled = cache;
    opts.cache_capacity = capacity;
    opts.stopwords = StopwordSet::load(test::data_path("fixtures/stopwords_of.txt"));
    auto svc = std::make_unique<AnalyticsService>(std::move(opts));
    svc->load(fixture_ptr());
    return svc;
}

struct GoldenCase {
    const char* file;
    const char* path;
    QueryParams params;
    int status;
};

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases{
        {"themeriver_default.json", "/api/themeriver", {}, 200},
        {"themeriver_month_2019.json", "/api/themeriver", {{"from", "2019-01-01"}, {"to", "2019-12-31"}, {"granularity", "month"}}, 200},
        {"coauthors_default.json", "/api/coauthors", {}, 200},
        {"coauthors_2019_n10.json", "/api/coauthors", {{"from", "2019-01-01"}, {"to", "2019-12-31"}, {"n", "10"}}, 200},
        {"coauthors_n2.json", "/api/coauthors", {{"n", "2"}}, 200},
        {"venues_n2.json", "/api/venues", {{"n", "2"}}, 200},
        {"venues_default.json", "/api/venues", {}, 200},
        {"words_k3.json", "/api/words", {{"k", "3"}}, 200},
        {"words_per_bucket_k2.json", "/api/words", {{"k", "2"}, {"mode", "per_bucket"}}, 200},
        {"corpus_stats.json", "/api/corpus/stats", {}, 200},
        {"healthz.json", "/healthz", {}, 200},
        {"error_invalid_k.json", "/api/words", {{"k", "0"}}, 400},
    };
    return cases;
}

} // namespace

TEST_SUITE("service") {

TEST_CASE("defaults are applied before validation") {
    auto c = test::fixture_a();
    auto words = resolve_request(View::words, {}, c);
    CHECK(words.n_or_k == 10);
    CHECK(words.mode == RaceMode::cumulative);
    CHECK(words.granularity == Granularity::year);
    CHECK(words.range.from == test::ymd(2019, 3, 1));
    CHECK(words.range.to == test::ymd(2021, 2, 20));
    CHECK(resolve_request(View::coauthors, {}, c).n_or_k == 20);
    CHECK(resolve_request(View::venues, {}, c).n_or_k == 5);
    CHECK(resolve_request(View::words, {{"n", "4"}}, c).n_or_k == 4);
    CHECK(resolve_request(View::words, {{"n", "4"}, {"k", "6"}}, c).n_or_k == 6);

    auto echo = resolve_request(View::venues, {{"from", "2019-06-01"}}, c).params_echo();
    CHECK(echo == json{{"from", "2019-06-01"}, {"to", "2021-02-20"}, {"n", 5}});

    auto empty = resolve_request(View::themeriver, {}, Corpus{});
    CHECK(empty.range.from == TimeRange::universal().from);
}

TEST_CASE("invalid parameters map to error codes") {
    auto c = test::fixture_a();
    auto code_of = [&](View v, QueryParams p) -> std::string {
        try {
            resolve_request(v, p, c);
        } catch (const Error& e) {
            return e.code();
        }
        return "";
    };
    CHECK(code_of(View::words, {{"k", "0"}}) == "InvalidK");
    CHECK(code_of(View::words, {{"k", "ten"}}) == "InvalidK");
    CHECK(code_of(View::coauthors, {{"n", "-1"}}) == "InvalidN");
    CHECK(code_of(View::venues, {{"n", "3.5"}}) == "InvalidN");
    CHECK(code_of(View::venues, {{"n", "99999999999"}}) == "InvalidN");
    CHECK(code_of(View::themeriver, {{"from", "2019"}}) == "InvalidDate");
    CHECK(code_of(View::themeriver, {{"to", "2019-02-30"}}) == "InvalidDate");
    CHECK(code_of(View::themeriver, {{"from", "2020-01-01"}, {"to", "2019-01-01"}}) == "InvalidRange");
    CHECK(code_of(View::themeriver, {{"granularity", "week"}}) == "InvalidGranularity");
    CHECK(code_of(View::words, {{"mode", "sum"}}) == "InvalidMode");
    CHECK(code_of(View::themeriver, {{"n", "0"}}) == "");
}

TEST_CASE("canonical keys distinguish resolved requests") {
    auto c = test::fixture_a();
    std::set<std::string> keys;
    int total = 0;
    for (auto v : {View::themeriver, View::coauthors, View::venues, View::words}) {
        for (const char* n : {"1", "2", "10"}) {
            for (const char* g : {"year", "month"}) {
                for (const char* m : {"cumulative", "per_bucket"}) {
                    QueryParams p{{"n", n}, {"granularity", g}, {"mode", m}};
                    auto req = resolve_request(v, p, c);
                    keys.insert(req.canonical_key());
                    ++total;
                }
            }
        }
    }
    // themeriver ignores n and mode (2 distinct), coauthors/venues ignore granularity and mode (3 each),
    // words uses all three (12).
    CHECK(keys.size() == 2 + 3 + 3 + 12);
    CHECK(total == 48);
}

TEST_CASE("envelope for venues over the full range") {
    auto svc = make_service();
    auto c = test::fixture_a();
    auto body = json::parse(svc->handle_view(resolve_request(View::venues, {{"n", "2"}}, c)));
    CHECK(body["view"] == "venues");
    CHECK(body["paper_count"] == 5);
    const auto& venues = body["data"]["venues"];
    REQUIRE(venues.size() == 2);
    CHECK(venues[0]["venue"] == "V1");
    CHECK(venues[0]["total_citations"] == 15);
    CHECK(venues[1]["venue"] == "V2");
    CHECK(venues[1]["total_citations"] == 10);
    CHECK(venues[0]["boxes"][0]["title"] == "Alpha");
    CHECK(venues[0]["boxes"][0]["link"] == "https://scholar.google.com/scholar?q=Alpha");
}

TEST_CASE("coauthors restricted to 2019") {
    auto svc = make_service();
    auto resp = svc->handle("/api/coauthors", {{"from", "2019-01-01"}, {"to", "2019-12-31"}, {"n", "10"}});
    REQUIRE(resp.status == 200);
    auto body = json::parse(resp.body);
    CHECK(body["paper_count"] == 2);
    CHECK(body["data"]["edges"] == json::parse(R"([{"source":"A","target":"B","weight":1},
                                                   {"source":"A","target":"C","weight":1}])"));
}

TEST_CASE("error responses") {
    auto svc = make_service();
    auto bad = svc->handle("/api/words", {{"k", "0"}});
    CHECK(bad.status == 400);
    CHECK(json::parse(bad.body)["error"]["code"] == "InvalidK");

    auto unknown = svc->handle("/api/authors", {});
    CHECK(unknown.status == 400);
    CHECK(json::parse(unknown.body)["error"]["code"] == "UnknownView");

    CHECK(svc->handle("/nope", {}).status == 404);

    AnalyticsService cold;
    CHECK_FALSE(cold.ready());
    auto not_ready = cold.handle("/api/themeriver", {});
    CHECK(not_ready.status == 503);
    CHECK(json::parse(not_ready.body)["error"]["code"] == "NotReady");
    CHECK(cold.handle("/healthz", {}).status == 503);
    CHECK(cold.handle("/api/corpus/stats", {}).status == 503);
}

TEST_CASE("identical requests hit the cache and return the same bytes") {
    auto svc = make_service();
    auto a = svc->handle("/api/words", {{"k", "3"}});
    auto b = svc->handle("/api/words", {{"k", "3"}});
    CHECK(a.body == b.body);
    CHECK(svc->cache_stats().hits == 1);
    CHECK(svc->cache_stats().misses == 1);
    // Different spelling of the same resolved request shares the entry.
    svc->handle("/api/words", {{"n", "3"}, {"mode", "cumulative"}});
    CHECK(svc->cache_stats().hits == 2);
    // Errors are not cached.
    svc->handle("/api/words", {{"k", "0"}});
    CHECK(svc->cache_stats().entries == 1);
}

TEST_CASE("golden responses for every endpoint") {
    auto svc = make_service();
    const bool update = std::getenv("RTV_UPDATE_GOLDEN") != nullptr;
    for (const auto& gc : golden_cases()) {
        CAPTURE(gc.file);
        auto resp = svc->handle(gc.path, gc.params);
        CHECK(resp.status == gc.status);
        const auto path = test::data_path(std::string("golden/") + gc.file);
        if (update) {
            std::ofstream(path) << json::parse(resp.body).dump(2) << "\n";
            continue;
        }
        CHECK(json::parse(resp.body) == json::parse(test::read_file(path)));
    }
}

TEST_CASE("cached and uncached services answer identically") {
    auto cached = make_service(true, 2);
    auto uncached = make_service(false);
    for (int round = 0; round < 3; ++round) {
        for (const auto& gc : golden_cases()) {
            CAPTURE(gc.file);
            auto a = cached->handle(gc.path, gc.params);
            auto b = uncached->handle(gc.path, gc.params);
            CHECK(a.status == b.status);
            CHECK(a.body == b.body);
        }
    }
    CHECK(cached->cache_stats().evictions > 0);
}

TEST_CASE("concurrent requests match serial responses") {
    auto svc = make_service(true, 4);
    auto reference = make_service(false);
    std::vector<std::string> expected;
    for (const auto& gc : golden_cases()) expected.push_back(reference->handle(gc.path, gc.params).body);

    std::vector<std::thread> threads;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            const auto& cases = golden_cases();
            for (int i = 0; i < 60; ++i) {
                std::size_t idx = static_cast<std::size_t>((i * 7 + t) % static_cast<int>(cases.size()));
                if (svc->handle(cases[idx].path, cases[idx].params).body != expected[idx]) ++mismatches;
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(mismatches == 0);
}

TEST_CASE("corpus stats") {
    auto svc = make_service();
    auto stats = svc->corpus_stats();
    CHECK(stats == json{{"paper_count", 5}, {"date_min", "2019-03-01"}, {"date_max", "2021-02-20"},
                        {"venue_count", 3}, {"field_count", 3}, {"author_count", 4}});
    AnalyticsService empty;
    empty.load(std::make_shared<const Corpus>());
    CHECK(empty.corpus_stats()["date_min"].is_null());
}

}
