#include "rtv/service.hpp"

#include "rtv/coauthor.hpp"
#include "rtv/error.hpp"
#include "rtv/json_io.hpp"
#include "rtv/themeriver.hpp"
#include "rtv/venues.hpp"

#include <charconv>
#include <set>

namespace rtv {

using nlohmann::json;

std::optional<View> parse_view(std::string_view text) {
    if (text == "themeriver") return View::themeriver;
    if (text == "coauthors") return View::coauthors;
    if (text == "venues") return View::venues;
    if (text == "words") return View::words;
    return std::nullopt;
}

std::string_view to_string(View v) {
    switch (v) {
    case View::themeriver: return "themeriver";
    case View::coauthors: return "coauthors";
    case View::venues: return "venues";
    case View::words: return "words";
    }
    return "unknown";
}

json ViewRequest::params_echo() const {
    json p = {{"from", format_date(range.from)}, {"to", format_date(range.to)}};
    switch (view) {
    case View::themeriver:
        p["granularity"] = to_string(granularity);
        break;
    case View::coauthors:
    case View::venues:
        p["n"] = n_or_k;
        break;
    case View::words:
        p["k"] = n_or_k;
        p["granularity"] = to_string(granularity);
        p["mode"] = to_string(mode);
        break;
    }
    return p;
}

std::string ViewRequest::canonical_key() const {
    return std::string(to_string(view)) + "?" + params_echo().dump();
}

namespace {

const std::string* find_param(const QueryParams& params, const char* key) {
    auto it = params.find(key);
    return it == params.end() ? nullptr : &it->second;
}

Date resolve_date(const QueryParams& params, const char* key, Date fallback) {
    const auto* text = find_param(params, key);
    if (!text) return fallback;
    auto d = parse_iso_date(*text);
    if (!d) throw Error("InvalidDate", std::string(key) + " must be a YYYY-MM-DD date, got '" + *text + "'");
    return *d;
}

int resolve_count(const std::string* text, int fallback, const char* code, const char* name) {
    if (!text) return fallback;
    int v = 0;
    auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
    if (ec != std::errc{} || ptr != text->data() + text->size() || v < 1) {
        throw Error(code, std::string(name) + " must be a positive integer, got '" + *text + "'");
    }
    return v;
}

} // namespace

ViewRequest resolve_request(View view, const QueryParams& params, const Corpus& corpus) {
    ViewRequest req;
    req.view = view;

    const TimeRange bounds = corpus.date_bounds().value_or(TimeRange::universal());
    req.range.from = resolve_date(params, "from", bounds.from);
    req.range.to = resolve_date(params, "to", bounds.to);
    if (req.range.to < req.range.from) {
        throw Error("InvalidRange", "from must not be after to");
    }

    if (const auto* g = find_param(params, "granularity")) {
        auto parsed = parse_granularity(*g);
        if (!parsed) throw Error("InvalidGranularity", "granularity must be year or month");
        req.granularity = *parsed;
    }

    switch (view) {
    case View::themeriver:
        req.n_or_k = 0;
        break;
    case View::coauthors:
        req.n_or_k = resolve_count(find_param(params, "n"), kDefaultAuthors, "InvalidN", "n");
        break;
    case View::venues:
        req.n_or_k = resolve_count(find_param(params, "n"), kDefaultVenues, "InvalidN", "n");
        break;
    case View::words: {
        const auto* k = find_param(params, "k");
        req.n_or_k = resolve_count(k ? k : find_param(params, "n"), kDefaultWords, "InvalidK", "k");
        if (const auto* m = find_param(params, "mode")) {
            auto parsed = parse_race_mode(*m);
            if (!parsed) throw Error("InvalidMode", "mode must be cumulative or per_bucket");
            req.mode = *parsed;
        }
        break;
    }
    }
    return req;
}

std::string error_body(std::string_view code, std::string_view message) {
    return json{{"error", {{"code", code}, {"message", message}}}}.dump();
}

int http_status_for(std::string_view code) {
    if (code == "NotReady") return 503;
    if (code == "NotFound") return 404;
    if (code == "Internal") return 500;
    return 400;
}

namespace {

json data_for_slice(const std::vector<PaperRecord>& sliced, const ViewRequest& req,
                    const StopwordSet& stop) {
    switch (req.view) {
    case View::themeriver: {
        auto fs = field_series(sliced, req.granularity);
        return themeriver_json(fs, stream_layout(fs));
    }
    case View::coauthors:
        return coauthors_json(top_n_subgraph(build_cooccurrence(sliced), req.n_or_k));
    case View::venues: {
        std::vector<std::string> names;
        for (auto& v : rank_venues(sliced, req.n_or_k)) names.push_back(std::move(v.venue));
        return venues_json(build_stacks(sliced, names));
    }
    case View::words:
        return race_json(race_frames(bucket_word_counts(sliced, req.granularity, stop), req.n_or_k, req.mode));
    }
    throw Error("Internal", "unhandled view");
}

} // namespace

json compute_view_data(const Corpus& corpus, const ViewRequest& req, const StopwordSet& stop) {
    return data_for_slice(slice(corpus, req.range), req, stop);
}

AnalyticsService::AnalyticsService() : AnalyticsService(Options{}) {}

AnalyticsService::AnalyticsService(Options options) : options_(std::move(options)) {
    if (options_.cache_enabled) cache_ = std::make_unique<LruCache>(options_.cache_capacity);
}

void AnalyticsService::load(std::shared_ptr<const Corpus> corpus) {
    std::lock_guard lock(corpus_mu_);
    corpus_ = std::move(corpus);
    if (cache_) cache_->clear();
}

bool AnalyticsService::ready() const {
    std::lock_guard lock(corpus_mu_);
    return corpus_ != nullptr;
}

std::shared_ptr<const Corpus> AnalyticsService::corpus() const {
    std::lock_guard lock(corpus_mu_);
    return corpus_;
}

std::shared_ptr<const Corpus> AnalyticsService::require_corpus() const {
    auto c = corpus();
    if (!c) throw Error("NotReady", "corpus not loaded");
    return c;
}

std::string AnalyticsService::compute_envelope(const Corpus& corpus, const ViewRequest& req) const {
    const auto sliced = slice(corpus, req.range);
    json envelope = {{"view", to_string(req.view)},
                     {"params_echo", req.params_echo()},
                     {"paper_count", sliced.size()},
                     {"data", data_for_slice(sliced, req, options_.stopwords)}};
    return envelope.dump();
}

std::string AnalyticsService::handle_view(const ViewRequest& req) {
    auto corpus = require_corpus();
    if (!cache_) return compute_envelope(*corpus, req);
    const std::string key = req.canonical_key() + "#" + corpus->fingerprint();
    return cache_->get_or_compute(key, [&] { return compute_envelope(*corpus, req); });
}

json AnalyticsService::view_data(const ViewRequest& req) const {
    return compute_view_data(*require_corpus(), req, options_.stopwords);
}

json AnalyticsService::corpus_stats() const {
    auto corpus = require_corpus();
    std::set<std::string_view> venues, fields, authors;
    for (const auto& r : corpus->records()) {
        venues.insert(r.venue);
        for (const auto& f : r.fields_of_study) fields.insert(f);
        for (const auto& a : r.authors) authors.insert(a);
    }
    auto bounds = corpus->date_bounds();
    return {{"paper_count", corpus->size()},
            {"date_min", bounds ? json(format_date(bounds->from)) : json(nullptr)},
            {"date_max", bounds ? json(format_date(bounds->to)) : json(nullptr)},
            {"venue_count", venues.size()},
            {"field_count", fields.size()},
            {"author_count", authors.size()}};
}

CacheStats AnalyticsService::cache_stats() const {
    return cache_ ? cache_->stats() : CacheStats{};
}

HttpResponse AnalyticsService::handle(std::string_view path, const QueryParams& params) {
    try {
        if (path == "/healthz") {
            if (!ready()) throw Error("NotReady", "corpus not loaded");
            return {200, json{{"status", "ok"}}.dump()};
        }
        if (path == "/api/corpus/stats") return {200, corpus_stats().dump()};

        constexpr std::string_view prefix = "/api/";
        if (path.starts_with(prefix)) {
            auto name = path.substr(prefix.size());
            auto view = parse_view(name);
            if (!view) throw Error("UnknownView", "unknown view '" + std::string(name) + "'");
            auto corpus = require_corpus();
            return {200, handle_view(resolve_request(*view, params, *corpus))};
        }
        throw Error("NotFound", "no route for '" + std::string(path) + "'");
    } catch (const Error& e) {
        return {http_status_for(e.code()), error_body(e.code(), e.what())};
    } catch (const std::exception& e) {
        return {500, error_body("Internal", e.what())};
    }
}

} // namespace rtv
