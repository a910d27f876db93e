#pragma once

#include "rtv/corpus.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rtv {

struct VenueTotal {
    std::string venue;
    std::int64_t total_citations = 0;

    bool operator==(const VenueTotal&) const = default;
};

struct PaperBox {
    std::string paper_id;
    std::string title;
    int year = 0;
    std::int64_t citations = 0;
    std::string link;

    bool operator==(const PaperBox&) const = default;
};

/// Boxes are ordered by citations desc, then title asc, so the most cited
/// paper sits on top of the bar.
struct VenueStack {
    std::string venue;
    std::int64_t total_citations = 0;
    std::vector<PaperBox> boxes;

    bool operator==(const VenueStack&) const = default;
};

/// Venues by summed citations (desc, ties by name asc), first min(n, |venues|).
/// Throws Error("InvalidN") when n < 1.
std::vector<VenueTotal> rank_venues(std::span<const PaperRecord> records, int n);

std::vector<VenueStack> build_stacks(std::span<const PaperRecord> records,
                                     std::span<const std::string> venues);

/// "https://scholar.google.com/scholar?q=" + form-encoded title.
std::string scholar_url(std::string_view title);

/// application/x-www-form-urlencoded: unreserved bytes kept, space as '+',
/// everything else %XX (uppercase hex).
std::string form_encode(std::string_view text);

} // namespace rtv
