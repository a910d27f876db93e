#pragma once

#include "rtv/coauthor.hpp"
#include "rtv/corpus.hpp"
#include "rtv/text.hpp"
#include "rtv/themeriver.hpp"
#include "rtv/venues.hpp"

#include <json.hpp>

namespace rtv {

/// { nodes: [{name, collaborator_count, weighted_degree}], edges: [{source, target, weight}] }
/// Nodes follow the ranking order; edges are sorted by (source, target).
nlohmann::json coauthors_json(const CoGraph& g);

/// { venues: [{venue, total_citations, boxes: [{paper_id, title, year, citations, link}]}] }
nlohmann::json venues_json(const std::vector<VenueStack>& stacks);

/// { buckets, order, baseline, bands: {field: [[lower, upper], ...]}, counts: {field: [...]} }
nlohmann::json themeriver_json(const FieldSeries& fs, const StreamLayout& layout);

/// { mode, k, frames: [{bucket, entries: [{word, count}]}] }
nlohmann::json race_json(const RaceSeries& race);

nlohmann::json issue_json(const IngestIssue& issue);

} // namespace rtv
