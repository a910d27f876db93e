#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rtv {

using Date = std::chrono::year_month_day;

/// Parses "YYYY-MM-DD", "YYYY-MM" or "YYYY"; missing parts default to the first
/// month/day. Returns nullopt for anything else, including impossible dates.
std::optional<Date> parse_date(std::string_view text);

/// Strict "YYYY-MM-DD" parse used for query strings.
std::optional<Date> parse_iso_date(std::string_view text);

std::string format_date(const Date& d);

/// Inclusive on both ends.
struct TimeRange {
    Date from;
    Date to;

    bool contains(const Date& d) const noexcept { return from <= d && d <= to; }
    bool valid() const noexcept { return from.ok() && to.ok() && from <= to; }

    static TimeRange universal();
};

/// Intersection of two ranges, nullopt when disjoint.
std::optional<TimeRange> intersect(const TimeRange& a, const TimeRange& b);

enum class Granularity { year, month };

std::optional<Granularity> parse_granularity(std::string_view text);
std::string_view to_string(Granularity g);

/// "YYYY" or "YYYY-MM". Lexicographic order matches chronological order
/// within one granularity.
using BucketId = std::string;

BucketId bucket_of(const Date& d, Granularity g);

/// Every bucket from the one containing `first` to the one containing `last`,
/// inclusive and without gaps. Empty when first > last.
std::vector<BucketId> bucket_span(const Date& first, const Date& last, Granularity g);

} // namespace rtv
