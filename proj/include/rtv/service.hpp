#pragma once

#include "rtv/cache.hpp"
#include "rtv/corpus.hpp"
#include "rtv/text.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace rtv {

enum class View { themeriver, coauthors, venues, words };

std::optional<View> parse_view(std::string_view text);
std::string_view to_string(View v);

inline constexpr int kDefaultAuthors = 20;
inline constexpr int kDefaultVenues = 5;
inline constexpr int kDefaultWords = 10;

using QueryParams = std::map<std::string, std::string>;

/// A fully resolved view request: defaults applied, every field concrete.
struct ViewRequest {
    View view = View::themeriver;
    TimeRange range = TimeRange::universal();
    Granularity granularity = Granularity::year;
    int n_or_k = 0;                 // 0 for themeriver
    RaceMode mode = RaceMode::cumulative;

    /// Only the parameters that influence `view`, with resolved values.
    nlohmann::json params_echo() const;
    /// Injective over distinct resolved requests.
    std::string canonical_key() const;
};

/// Applies defaults (range = corpus bounds, granularity = year, n/k per view,
/// mode = cumulative) and validates. Accepted parameters: from, to, granularity,
/// n (coauthors, venues), k or n (words), mode (words).
/// Throws Error with codes InvalidDate, InvalidRange, InvalidN, InvalidK,
/// InvalidGranularity, InvalidMode.
ViewRequest resolve_request(View view, const QueryParams& params, const Corpus& corpus);

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// Error body: { "error": { "code", "message" } }.
std::string error_body(std::string_view code, std::string_view message);

int http_status_for(std::string_view code);

class AnalyticsService {
public:
    struct Options {
        std::size_t cache_capacity = 256;
        bool cache_enabled = true;
        StopwordSet stopwords = StopwordSet::english();
    };

    AnalyticsService();
    explicit AnalyticsService(Options options);

    /// Installs the corpus; the service reports ready afterwards.
    void load(std::shared_ptr<const Corpus> corpus);
    bool ready() const;
    std::shared_ptr<const Corpus> corpus() const;

    /// Routes GET paths: /api/{themeriver,coauthors,venues,words},
    /// /api/corpus/stats, /healthz.
    HttpResponse handle(std::string_view path, const QueryParams& params);

    /// Envelope { view, params_echo, paper_count, data } serialized; served
    /// from the cache when enabled. Throws Error("NotReady") before load().
    std::string handle_view(const ViewRequest& req);

    /// The `data` member of the envelope, computed without the cache.
    nlohmann::json view_data(const ViewRequest& req) const;

    nlohmann::json corpus_stats() const;

    CacheStats cache_stats() const;

private:
    std::shared_ptr<const Corpus> require_corpus() const;
    std::string compute_envelope(const Corpus& corpus, const ViewRequest& req) const;

    Options options_;
    std::unique_ptr<LruCache> cache_;
    mutable std::mutex corpus_mu_;
    std::shared_ptr<const Corpus> corpus_;
};

nlohmann::json compute_view_data(const Corpus& corpus, const ViewRequest& req,
                                 const StopwordSet& stop);

} // namespace rtv
