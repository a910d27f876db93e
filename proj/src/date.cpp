#include "rtv/date.hpp"

#include <charconv>
#include <cstdio>

namespace rtv {

namespace {

using namespace std::chrono;

std::optional<int> parse_digits(std::string_view s, std::size_t width) {
    if (s.size() != width) return std::nullopt;
    int value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    return value;
}

std::optional<Date> make_date(int y, int m, int d) {
    if (y < 1) return std::nullopt;
    Date date{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!date.ok()) return std::nullopt;
    return date;
}

} // namespace

std::optional<Date> parse_date(std::string_view text) {
    auto y = parse_digits(text.substr(0, 4), 4);
    if (!y) return std::nullopt;
    if (text.size() == 4) return make_date(*y, 1, 1);
    if (text.size() < 7 || text[4] != '-') return std::nullopt;
    auto m = parse_digits(text.substr(5, 2), 2);
    if (!m) return std::nullopt;
    if (text.size() == 7) return make_date(*y, *m, 1);
    if (text.size() != 10 || text[7] != '-') return std::nullopt;
    auto d = parse_digits(text.substr(8, 2), 2);
    if (!d) return std::nullopt;
    return make_date(*y, *m, *d);
}

std::optional<Date> parse_iso_date(std::string_view text) {
    if (text.size() != 10) return std::nullopt;
    return parse_date(text);
}

std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(d.year()),
                  static_cast<unsigned>(d.month()), static_cast<unsigned>(d.day()));
    return buf;
}

TimeRange TimeRange::universal() {
    return {Date{year{1}, January, day{1}}, Date{year{9999}, December, day{31}}};
}

std::optional<TimeRange> intersect(const TimeRange& a, const TimeRange& b) {
    TimeRange r{std::max(a.from, b.from), std::min(a.to, b.to)};
    if (r.to < r.from) return std::nullopt;
    return r;
}

std::optional<Granularity> parse_granularity(std::string_view text) {
    if (text == "year") return Granularity::year;
    if (text == "month") return Granularity::month;
    return std::nullopt;
}

std::string_view to_string(Granularity g) {
    return g == Granularity::year ? "year" : "month";
}

BucketId bucket_of(const Date& d, Granularity g) {
    char buf[16];
    if (g == Granularity::year) {
        std::snprintf(buf, sizeof buf, "%04d", static_cast<int>(d.year()));
    } else {
        std::snprintf(buf, sizeof buf, "%04d-%02u", static_cast<int>(d.year()),
                      static_cast<unsigned>(d.month()));
    }
    return buf;
}

std::vector<BucketId> bucket_span(const Date& first, const Date& last, Granularity g) {
    std::vector<BucketId> out;
    if (last < first) return out;
    if (g == Granularity::year) {
        for (int y = static_cast<int>(first.year()); y <= static_cast<int>(last.year()); ++y) {
            out.push_back(bucket_of(Date{year{y}, January, day{1}}, g));
        }
        return out;
    }
    year_month cur{first.year(), first.month()};
    const year_month end{last.year(), last.month()};
    for (; cur <= end; cur += months{1}) {
        out.push_back(bucket_of(Date{cur.year(), cur.month(), day{1}}, g));
    }
    return out;
}

} // namespace rtv
