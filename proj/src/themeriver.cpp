#include "rtv/themeriver.hpp"

#include <algorithm>
#include <numeric>

namespace rtv {

FieldSeries field_series(std::span<const PaperRecord> records, Granularity g) {
    FieldSeries fs;
    if (records.empty()) return fs;

    auto [lo, hi] = std::minmax_element(records.begin(), records.end(),
                                        [](const auto& a, const auto& b) { return a.pub_date < b.pub_date; });
    fs.buckets = bucket_span(lo->pub_date, hi->pub_date, g);

    const std::string unspecified(kUnspecifiedField);
    for (const auto& r : records) {
        const auto bucket = bucket_of(r.pub_date, g);
        const auto t = static_cast<std::size_t>(
            std::lower_bound(fs.buckets.begin(), fs.buckets.end(), bucket) - fs.buckets.begin());
        auto bump = [&](const std::string& field) {
            auto [it, _] = fs.series.try_emplace(field, fs.buckets.size(), 0);
            ++it->second[t];
        };
        if (r.fields_of_study.empty()) {
            bump(unspecified);
        } else {
            for (const auto& f : r.fields_of_study) bump(f);
        }
    }
    return fs;
}

StreamLayout stream_layout(const FieldSeries& fs) {
    StreamLayout layout;
    layout.buckets = fs.buckets;
    const std::size_t steps = fs.buckets.size();

    std::vector<std::pair<std::string, std::int64_t>> totals;
    for (const auto& [field, counts] : fs.series) {
        totals.emplace_back(field, std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
    }
    std::stable_sort(totals.begin(), totals.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (auto& [field, _] : totals) layout.order.push_back(field);

    layout.baseline.assign(steps, 0.0);
    for (std::size_t t = 0; t < steps; ++t) {
        std::int64_t total = 0;
        for (const auto& [_, counts] : fs.series) total += counts[t];
        layout.baseline[t] = total == 0 ? 0.0 : -0.5 * static_cast<double>(total);
    }

    std::vector<double> cursor = layout.baseline;
    for (const auto& field : layout.order) {
        const auto& counts = fs.series.at(field);
        auto& bands = layout.bands[field];
        bands.resize(steps);
        for (std::size_t t = 0; t < steps; ++t) {
            bands[t].lower = cursor[t];
            cursor[t] += static_cast<double>(counts[t]);
            bands[t].upper = cursor[t];
        }
    }
    return layout;
}

} // namespace rtv
