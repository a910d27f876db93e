#include "rtv/json_io.hpp"

namespace rtv {

using nlohmann::json;

json coauthors_json(const CoGraph& g) {
    json nodes = json::array();
    for (const auto& name : ranked_authors(g)) {
        const auto& m = g.nodes.at(name);
        nodes.push_back({{"name", name},
                         {"collaborator_count", m.collaborator_count},
                         {"weighted_degree", m.weighted_degree}});
    }
    json edges = json::array();
    for (const auto& [pair, w] : g.edges) {
        edges.push_back({{"source", pair.first}, {"target", pair.second}, {"weight", w}});
    }
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

json venues_json(const std::vector<VenueStack>& stacks) {
    json venues = json::array();
    for (const auto& s : stacks) {
        json boxes = json::array();
        for (const auto& b : s.boxes) {
            boxes.push_back({{"paper_id", b.paper_id},
                             {"title", b.title},
                             {"year", b.year},
                             {"citations", b.citations},
                             {"link", b.link}});
        }
        venues.push_back({{"venue", s.venue},
                          {"total_citations", s.total_citations},
                          {"boxes", std::move(boxes)}});
    }
    return {{"venues", std::move(venues)}};
}

json themeriver_json(const FieldSeries& fs, const StreamLayout& layout) {
    json bands = json::object();
    for (const auto& [field, list] : layout.bands) {
        json pairs = json::array();
        for (const auto& b : list) pairs.push_back(json::array({b.lower, b.upper}));
        bands[field] = std::move(pairs);
    }
    json counts = json::object();
    for (const auto& [field, list] : fs.series) counts[field] = list;
    return {{"buckets", layout.buckets},
            {"order", layout.order},
            {"baseline", layout.baseline},
            {"bands", std::move(bands)},
            {"counts", std::move(counts)}};
}

json race_json(const RaceSeries& race) {
    json frames = json::array();
    for (const auto& f : race.frames) {
        json entries = json::array();
        for (const auto& e : f.entries) entries.push_back({{"word", e.word}, {"count", e.count}});
        frames.push_back({{"bucket", f.bucket}, {"entries", std::move(entries)}});
    }
    return {{"mode", to_string(race.mode)}, {"k", race.k}, {"frames", std::move(frames)}};
}

json issue_json(const IngestIssue& issue) {
    return {{"locator", issue.locator}, {"severity", to_string(issue.severity)}, {"reason", issue.reason}};
}

} // namespace rtv
