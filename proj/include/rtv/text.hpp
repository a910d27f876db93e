#pragma once

#include "rtv/corpus.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace rtv {

/// Lowercase stopword tokens; exact-match membership.
class StopwordSet {
public:
    StopwordSet() = default;
    StopwordSet(std::initializer_list<std::string_view> words);

    /// One word per line; blank lines and lines starting with '#' are skipped.
    /// Entries are lowercased on load.
    static StopwordSet parse(std::string_view text, std::string source_path = {});
    static StopwordSet load(const std::string& path);
    /// The built-in English list (identical to data/stopwords_en.txt).
    static StopwordSet english();

    bool contains(std::string_view token) const;
    std::size_t size() const noexcept { return words_.size(); }
    const std::string& source_path() const noexcept { return source_path_; }

private:
    std::unordered_set<std::string> words_;
    std::string source_path_;
};

/// Lowercases, splits on every code point that is not a letter or digit, and
/// drops tokens shorter than two characters, pure-digit tokens and stopwords.
std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stop);

using WordCounts = std::map<std::string, std::int64_t>;

/// Chronological: std::map over BucketId orders buckets correctly.
using BucketWordCounts = std::map<BucketId, WordCounts>;

/// Token counts per bucket across all abstracts. Buckets between the first and
/// last record are emitted even when empty.
BucketWordCounts bucket_word_counts(std::span<const PaperRecord> records, Granularity g,
                                    const StopwordSet& stop);

enum class RaceMode { cumulative, per_bucket };

std::optional<RaceMode> parse_race_mode(std::string_view text);
std::string_view to_string(RaceMode m);

struct RaceEntry {
    std::string word;
    std::int64_t count = 0;

    bool operator==(const RaceEntry&) const = default;
};

struct RaceFrame {
    BucketId bucket;
    std::vector<RaceEntry> entries;  // count desc, then word asc; at most k
};

struct RaceSeries {
    RaceMode mode = RaceMode::cumulative;
    int k = 10;
    std::vector<RaceFrame> frames;
};

/// Throws Error("InvalidK") when k < 1.
RaceSeries race_frames(const BucketWordCounts& counts, int k, RaceMode mode);

/// Top-k of a single count table under the race ordering.
std::vector<RaceEntry> top_entries(const WordCounts& counts, int k);

} // namespace rtv
