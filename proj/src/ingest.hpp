#pragma once

// Shared row validation for the CSV and Semantic Scholar readers.

#include "rtv/corpus.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rtv::detail {

struct RawRecord {
    std::string title;
    std::vector<std::string> authors;
    std::string abstract;
    std::string date;
    bool date_is_year_only = false;  // Semantic Scholar `year` fallback
    std::string citations;
    std::string venue;
    std::vector<std::string> fields;
};

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 14695981039346656037ull);
std::string hex64(std::uint64_t v);

/// Builds the record or appends exactly one rejected issue. Warnings are only
/// reported for accepted rows.
std::optional<PaperRecord> validate(RawRecord raw, const std::string& locator,
                                    std::vector<IngestIssue>& issues);

/// Gives every record a content-derived id, suffixed "-2", "-3", ... on collisions.
void assign_ids(std::vector<PaperRecord>& records);

} // namespace rtv::detail
