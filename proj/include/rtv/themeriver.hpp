#pragma once

#include "rtv/corpus.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtv {

inline constexpr std::string_view kUnspecifiedField = "Unspecified";

/// Paper counts per field, aligned to a contiguous chronological bucket list.
struct FieldSeries {
    std::vector<BucketId> buckets;
    std::map<std::string, std::vector<std::int64_t>> series;

    bool operator==(const FieldSeries&) const = default;
};

struct Band {
    double lower = 0.0;
    double upper = 0.0;
};

struct StreamLayout {
    std::vector<BucketId> buckets;
    std::vector<std::string> order;  // bottom to top
    std::vector<double> baseline;
    std::map<std::string, std::vector<Band>> bands;
};

/// A paper counts once under every field it lists ("Unspecified" when none).
FieldSeries field_series(std::span<const PaperRecord> records, Granularity g);

/// Silhouette stream layout: baseline(t) = -total(t) / 2, fields stacked upward
/// by total count desc (ties by name asc), largest at the bottom.
StreamLayout stream_layout(const FieldSeries& fs);

} // namespace rtv
