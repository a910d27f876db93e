#include "rtv/venues.hpp"

#include "rtv/error.hpp"

#include <algorithm>
#include <map>

namespace rtv {

std::vector<VenueTotal> rank_venues(std::span<const PaperRecord> records, int n) {
    if (n < 1) throw Error("InvalidN", "n must be a positive integer");
    std::map<std::string, std::int64_t> totals;
    for (const auto& r : records) totals[r.venue] += r.citation_count;

    std::vector<VenueTotal> ranked;
    ranked.reserve(totals.size());
    for (auto& [venue, total] : totals) ranked.push_back({venue, total});
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.total_citations != b.total_citations) return a.total_citations > b.total_citations;
        return a.venue < b.venue;
    });
    ranked.resize(std::min(ranked.size(), static_cast<std::size_t>(n)));
    return ranked;
}

std::vector<VenueStack> build_stacks(std::span<const PaperRecord> records,
                                     std::span<const std::string> venues) {
    std::vector<VenueStack> stacks;
    stacks.reserve(venues.size());
    std::map<std::string_view, std::size_t> index;
    for (const auto& v : venues) {
        index.emplace(v, stacks.size());
        stacks.push_back({v, 0, {}});
    }
    for (const auto& r : records) {
        auto it = index.find(r.venue);
        if (it == index.end()) continue;
        auto& stack = stacks[it->second];
        stack.total_citations += r.citation_count;
        stack.boxes.push_back({r.id, r.title, static_cast<int>(r.pub_date.year()), r.citation_count,
                               scholar_url(r.title)});
    }
    for (auto& stack : stacks) {
        std::stable_sort(stack.boxes.begin(), stack.boxes.end(), [](const auto& a, const auto& b) {
            if (a.citations != b.citations) return a.citations > b.citations;
            if (a.title != b.title) return a.title < b.title;
            return a.paper_id < b.paper_id;
        });
    }
    return stacks;
}

std::string form_encode(std::string_view text) {
    static constexpr char hex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(text.size() * 3);
    for (unsigned char c : text) {
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' ||
            c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else if (c == ' ') {
            out.push_back('+');
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

std::string scholar_url(std::string_view title) {
    return "https://scholar.google.com/scholar?q=" + form_encode(title);
}

} // namespace rtv
